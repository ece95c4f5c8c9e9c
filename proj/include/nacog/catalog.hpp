#ifndef NACOG_CATALOG_HPP
#define NACOG_CATALOG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nacog/structure_file.hpp"

namespace nacog {

struct CatalogEntry {
  std::string name;       // "D", "L*", ...
  std::string file_stem;  // fixture file name without ".json"
  Structure structure;
  /// Predicate name (as in predicate_report) -> expected verdict.
  std::map<std::string, bool> expected;
};

/// Algebra with integer constants drawn uniformly from [-bound, bound] by a
/// 64-bit Mersenne twister seeded with `seed`.
Algebra seeded_random_algebra(std::uint64_t seed, std::size_t n, int bound);

/// Seed and shape of the catalog's random non-Lie-admissible algebra "N".
inline constexpr std::uint64_t kCatalogRandomSeed = 1;
inline constexpr std::size_t kCatalogRandomDim = 3;
inline constexpr int kCatalogRandomBound = 1;

/// Algebras D (dual numbers), L (2-dim Lie bracket), W (affine vector
/// fields, f∂·g∂ = fg′∂ on {∂, x∂}; associative in this span), V (e1e2 = e2,
/// left-symmetric and not associative), P (opposite of V, pre-Lie),
/// Q (e1e1 = e2, e2e2 = e1), N (seeded, not Lie-admissible), Z (zero),
/// followed by the dual coalgebra of each.
const std::vector<CatalogEntry>& catalog_entries();

const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace nacog

#endif  // NACOG_CATALOG_HPP
