#include "nacog/witness.hpp"

#include <sstream>

namespace nacog {

std::string format_indices(const std::vector<std::size_t>& basis) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < basis.size(); ++i) os << (i ? "," : "") << basis[i];
  os << ')';
  return os.str();
}

std::string format_coordinates(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace nacog
