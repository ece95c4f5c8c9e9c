#include "nacog/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace nacog {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

}  // namespace

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat::Rat(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rat: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num, true))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpq_class q;
  q.get_num() = mpz_class(std::string(num), 10);
  if (slash == std::string_view::npos) {
    q.get_den() = 1;
  } else {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den, false))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    q.get_den() = mpz_class(std::string(den), 10);
    if (sgn(q.get_den()) == 0)
      throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
  }
  return Rat(std::move(q));
}

std::string Rat::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rat: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace nacog
