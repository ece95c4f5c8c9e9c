#ifndef NACOG_WITNESS_HPP
#define NACOG_WITNESS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nacog/linalg.hpp"
#include "nacog/sigma3.hpp"

namespace nacog {

/// Evidence that an identity fails: the basis elements it was evaluated on
/// (1-based), an optional permutation for relations indexed by σ, and the
/// nonzero defect in coordinates (vectors of M, or flattened tensors).
struct Witness {
  std::string clause;
  std::vector<std::size_t> basis;
  std::optional<sigma3::Perm> perm;
  RatVector defect;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }

  explicit operator bool() const { return holds; }
};

struct PredicateResult {
  std::string name;
  Verdict verdict;
};

/// "(a,b,c)" with 1-based entries.
std::string format_indices(const std::vector<std::size_t>& basis);
/// "(x1,x2,...)" with rationals in canonical text form.
std::string format_coordinates(const RatVector& v);

}  // namespace nacog

#endif  // NACOG_WITNESS_HPP
