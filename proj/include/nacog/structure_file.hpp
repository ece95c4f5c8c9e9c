#ifndef NACOG_STRUCTURE_FILE_HPP
#define NACOG_STRUCTURE_FILE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "nacog/algebra.hpp"
#include "nacog/coalgebra.hpp"

namespace nacog {

using Structure = std::variant<Algebra, Coalgebra>;

/// Malformed structure file; the message names the line or field at fault.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses the JSON structure format
///   {"kind": "algebra"|"coalgebra", "dimension": n,
///    "constants": [{"i": .., "j": .., "k": .., "c": "p/q"}, ...]}
/// with 1-based indices. For algebras a record sets C_ij^k; for coalgebras
/// it sets D^k_ij. Duplicate keys are summed, omitted entries are zero.
Structure parse_structure(std::string_view json_text);
Structure read_structure(const std::string& path);

/// Canonical text: nonzero constants only, sorted by (i, j, k) for algebras
/// and (k, i, j) for coalgebras, one record per line, trailing newline.
std::string serialize(const Algebra& a);
std::string serialize(const Coalgebra& c);
std::string serialize(const Structure& s);

void write_text(const std::string& path, const std::string& text);

}  // namespace nacog

#endif  // NACOG_STRUCTURE_FILE_HPP
