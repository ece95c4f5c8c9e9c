#ifndef NACOG_COMMANDS_HPP
#define NACOG_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace nacog::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;

struct CheckOptions {
  /// "all", or a single predicate such as "g3", "g2!", "power3", "lie-admissible".
  std::string relation = "all";
  /// Use the literal Φ_{u_i} X = X form for coalgebra G_i^! checks.
  bool strict_shriek = false;
  /// When set, also evaluate the relations on seeded random vectors and
  /// report whether they agree with the basis verdicts.
  std::optional<std::uint64_t> seed;
};

int cmd_check(const std::string& path, const CheckOptions& options, std::ostream& out,
              std::ostream& err);

/// Writes the dual structure to out_path, or to `out` when out_path is empty.
int cmd_dualize(const std::string& path, const std::string& out_path, std::ostream& out,
                std::ostream& err);

int cmd_convolve(const std::string& algebra_path, const std::string& coalgebra_path,
                 const std::string& out_path, std::ostream& out, std::ostream& err);

int cmd_sigma3(const std::string& vector_text, std::ostream& out, std::ostream& err);

/// compat is "lie-admissible" or "pre-lie".
int cmd_bialgebra(const std::string& algebra_path, const std::string& coalgebra_path,
                  const std::string& compat, std::ostream& out, std::ostream& err);

}  // namespace nacog::cli

#endif  // NACOG_COMMANDS_HPP
