#include "nacog/catalog.hpp"

#include <random>
#include <stdexcept>

#include "nacog/duality.hpp"

namespace nacog {

Algebra seeded_random_algebra(std::uint64_t seed, std::size_t n, int bound) {
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  Algebra a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        a.constant(i, j, k) = static_cast<long>(rng() % span) - bound;
  return a;
}

namespace {

// Constants are given 1-based, matching the fixture files.
Algebra make_algebra(std::size_t n, std::initializer_list<std::tuple<int, int, int, long>> entries) {
  Algebra a(n);
  for (const auto& [i, j, k, c] : entries) a.constant(i - 1, j - 1, k - 1) = c;
  return a;
}

using Table = std::map<std::string, bool>;

Table algebra_table(bool g1, bool g2, bool g3, bool g4, bool g5, bool g6, bool power3,
                    std::array<bool, 5> shriek, bool commutator_lie) {
  Table t{{"G1", g1}, {"G2", g2}, {"G3", g3}, {"G4", g4}, {"G5", g5}, {"G6", g6},
          {"lie-admissible", g6}, {"power3", power3}, {"commutator-lie", commutator_lie}};
  for (int i = 2; i <= 6; ++i) t["G" + std::to_string(i) + "!"] = shriek[i - 2];
  return t;
}

Table coalgebra_table(std::array<bool, 6> gi, std::array<bool, 6> shriek, bool lie) {
  Table t{{"lie-admissible", gi[5]}, {"lie", lie}, {"delta-L-lie", gi[5]}};
  for (int i = 1; i <= 6; ++i) {
    t["G" + std::to_string(i)] = gi[i - 1];
    t["G" + std::to_string(i) + "!"] = shriek[i - 1];
  }
  return t;
}

std::vector<CatalogEntry> build() {
  const Algebra d = make_algebra(2, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}});
  const Algebra l = make_algebra(2, {{1, 2, 2, 1}, {2, 1, 2, -1}});
  const Algebra w = make_algebra(2, {{1, 2, 1, 1}, {2, 2, 2, 1}});
  const Algebra q = make_algebra(2, {{1, 1, 2, 1}, {2, 2, 1, 1}});
  const Algebra v = make_algebra(2, {{1, 2, 2, 1}});
  const Algebra p = make_algebra(2, {{2, 1, 2, 1}});
  const Algebra n = seeded_random_algebra(kCatalogRandomSeed, kCatalogRandomDim, kCatalogRandomBound);
  const Algebra z(2);

  constexpr bool T = true, F = false;
  // Verdicts produced by the brute-force reference evaluator.
  std::vector<CatalogEntry> entries{
      {"D", "D", d, algebra_table(T, T, T, T, T, T, T, {T, T, T, T, T}, T)},
      {"L", "L", l, algebra_table(F, F, F, F, T, T, T, {F, F, F, F, F}, T)},
      {"W", "W", w, algebra_table(T, T, T, T, T, T, T, {F, T, F, F, F}, T)},
      {"V", "V", v, algebra_table(F, T, F, F, F, T, F, {F, F, F, F, F}, T)},
      {"P", "P", p, algebra_table(F, F, T, F, F, T, F, {F, F, F, F, F}, T)},
      {"Q", "Q", q, algebra_table(F, F, F, F, T, T, T, {F, F, F, F, F}, T)},
      {"N", "N", n, algebra_table(F, F, F, F, F, F, F, {F, F, F, F, F}, F)},
      {"Z", "Z", z, algebra_table(T, T, T, T, T, T, T, {T, T, T, T, T}, T)},
      {"D*", "D_dual", dual_coalgebra(d), coalgebra_table({T, T, T, T, T, T}, {T, T, T, T, T, T}, F)},
      {"L*", "L_dual", dual_coalgebra(l), coalgebra_table({F, F, F, F, T, T}, {F, F, F, F, F, F}, T)},
      {"W*", "W_dual", dual_coalgebra(w), coalgebra_table({T, T, T, T, T, T}, {T, F, T, F, F, F}, F)},
      {"V*", "V_dual", dual_coalgebra(v), coalgebra_table({F, T, F, F, F, T}, {F, F, F, F, F, F}, F)},
      {"P*", "P_dual", dual_coalgebra(p), coalgebra_table({F, F, T, F, F, T}, {F, F, F, F, F, F}, F)},
      {"Q*", "Q_dual", dual_coalgebra(q), coalgebra_table({F, F, F, F, T, T}, {F, F, F, F, F, F}, F)},
      {"N*", "N_dual", dual_coalgebra(n), coalgebra_table({F, F, F, F, F, F}, {F, F, F, F, F, F}, F)},
      {"Z*", "Z_dual", Coalgebra(2), coalgebra_table({T, T, T, T, T, T}, {T, T, T, T, T, T}, T)},
  };
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw std::out_of_range("no catalog entry named '" + name + "'");
}

}  // namespace nacog
