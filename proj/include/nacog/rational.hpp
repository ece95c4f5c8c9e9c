#ifndef NACOG_RATIONAL_HPP
#define NACOG_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nacog {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Equality is structural.
class Rat {
public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT: implicit from integers is intended
  Rat(long numerator, long denominator);

  /// Parses "p" or "p/q" (optional leading '-', decimal digits, no
  /// whitespace). Throws std::invalid_argument on malformed text or q = 0.
  static Rat parse(std::string_view text);

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  Rat operator-() const { return Rat(mpq_class(-value_)); }
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  /// Throws std::domain_error on division by zero.
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  explicit Rat(mpq_class value);

  mpq_class value_{0};
};

}  // namespace nacog

#endif  // NACOG_RATIONAL_HPP
