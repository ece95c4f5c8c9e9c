#include <doctest.h>

#include <set>
#include <stdexcept>

#include "nacog/catalog.hpp"
#include "nacog/duality.hpp"
#include "oracle/brute_force.hpp"

using namespace nacog;

namespace {

std::map<std::string, bool> live(const Structure& s) {
  std::map<std::string, bool> out;
  const auto report = std::holds_alternative<Algebra>(s) ? predicate_report(std::get<Algebra>(s))
                                                         : predicate_report(std::get<Coalgebra>(s));
  for (const auto& r : report) out[r.name] = r.verdict.holds;
  return out;
}

std::map<std::string, bool> reference(const Structure& s) {
  return std::holds_alternative<Algebra>(s) ? oracle::algebra_table(std::get<Algebra>(s))
                                            : oracle::coalgebra_table(std::get<Coalgebra>(s));
}

}  // namespace

TEST_CASE("catalog contents") {
  const auto& all = catalog_entries();
  CHECK(all.size() == 16);
  std::set<std::string> names, stems;
  for (const auto& e : all) {
    names.insert(e.name);
    stems.insert(e.file_stem);
  }
  CHECK(names.size() == all.size());
  CHECK(stems.size() == all.size());
  CHECK(catalog_entry("D*").file_stem == "D_dual");
  CHECK_THROWS_AS(catalog_entry("X"), std::out_of_range);
}

TEST_CASE("duals are transcriptions") {
  for (const char* name : {"D", "L", "W", "V", "P", "Q", "N", "Z"}) {
    const auto& a = std::get<Algebra>(catalog_entry(name).structure);
    CHECK(std::get<Coalgebra>(catalog_entry(std::string(name) + "*").structure) == dual_coalgebra(a));
  }
}

TEST_CASE("seeded algebra") {
  const Algebra n = seeded_random_algebra(kCatalogRandomSeed, kCatalogRandomDim, kCatalogRandomBound);
  CHECK(std::get<Algebra>(catalog_entry("N").structure) == n);
  CHECK(seeded_random_algebra(7, 2, 3) == seeded_random_algebra(7, 2, 3));
  CHECK_FALSE(seeded_random_algebra(7, 2, 3) == seeded_random_algebra(8, 2, 3));
  CHECK_FALSE(is_lie_admissible(n).holds);
  CHECK(is_lie_admissible(n).witness->basis == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("expected verdicts match the predicates and the oracle") {
  for (const auto& e : catalog_entries()) {
    INFO(e.name);
    const auto got = live(e.structure);
    CHECK(got == e.expected);
    CHECK(reference(e.structure) == e.expected);
  }
}

TEST_CASE("selected frozen verdicts") {
  CHECK(catalog_entry("L").expected.at("G6"));
  CHECK_FALSE(catalog_entry("L").expected.at("G1"));
  CHECK(catalog_entry("W").expected.at("G1"));
  CHECK(catalog_entry("V").expected.at("G2"));
  CHECK_FALSE(catalog_entry("V").expected.at("G1"));
  CHECK(catalog_entry("P").expected.at("G3"));
  CHECK_FALSE(catalog_entry("V").expected.at("power3"));
  CHECK(catalog_entry("L*").expected.at("lie"));
  CHECK_FALSE(catalog_entry("D*").expected.at("lie"));
  CHECK(catalog_entry("D*").expected.at("G2!"));
  CHECK_FALSE(catalog_entry("W*").expected.at("G2!"));
  CHECK_FALSE(catalog_entry("N").expected.at("lie-admissible"));
}
