#include <doctest.h>

#include <stdexcept>

#include "nacog/catalog.hpp"
#include "nacog/coalgebra.hpp"
#include "oracle/brute_force.hpp"
#include "support.hpp"

using namespace nacog;
using sigma3::GroupVector;
using sigma3::Perm;
using testing::unit;

namespace {

const Coalgebra& coalg(const std::string& name) { return std::get<Coalgebra>(catalog_entry(name).structure); }

Tensor2 t2(std::size_t n, std::initializer_list<std::pair<Tensor2::Index, long>> entries) {
  Tensor2 t(n);
  for (const auto& [idx, c] : entries) t.at(idx) = c;
  return t;
}

Coalgebra scaled(Coalgebra c, const Rat& s) {
  for (std::size_t k = 0; k < c.dim(); ++k)
    for (std::size_t i = 0; i < c.dim(); ++i)
      for (std::size_t j = 0; j < c.dim(); ++j) c.constant(k, i, j) *= s;
  return c;
}

Coalgebra random_mixed(testing::Rng& rng, int t) {
  const std::size_t n = testing::draw_dim(rng, 2, 4);
  return t % 2 ? testing::random_coalgebra(rng, n) : testing::random_sparse_coalgebra(rng, n);
}

}  // namespace

TEST_CASE("comultiply") {
  CHECK(comultiply(Coalgebra(2), RatVector{1, 2}).is_zero());
  CHECK(comultiply(coalg("D*"), unit(2, 1)) == t2(2, {{{0, 1}, 1}, {{1, 0}, 1}}));
  CHECK(comultiply(coalg("D*"), unit(2, 0)) == t2(2, {{{0, 0}, 1}}));
  CHECK(comultiply(coalg("L*"), unit(2, 1)) == t2(2, {{{0, 1}, 1}, {{1, 0}, -1}}));
  CHECK(comultiply(coalg("L*"), unit(2, 0)).is_zero());
  CHECK_THROWS_AS(comultiply(coalg("D*"), RatVector{1}), std::invalid_argument);
}

TEST_CASE("coassociator") {
  for (std::size_t k = 0; k < 2; ++k) CHECK(coassociator(coalg("D*"), unit(2, k)).is_zero());
  CHECK(coassociator(Coalgebra(3), RatVector{1, 1, 1}).is_zero());
  Coalgebra one(1);
  one.constant(0, 0, 0) = 1;
  CHECK(coassociator(one, unit(1, 0)).is_zero());
  CHECK(iterated_coproduct(one, unit(1, 0)) == Tensor3::basis(1, {0, 0, 0}));
  CHECK_FALSE(coassociator(coalg("L*"), unit(2, 1)).is_zero());
  CHECK_THROWS_AS(coassociator(coalg("L*"), RatVector{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("delta_L") {
  CHECK(delta_L(coalg("L*")) == scaled(coalg("L*"), 2));
  CHECK(delta_L(coalg("D*")).is_zero());
  CHECK(delta_L(Coalgebra(2)).is_zero());

  testing::Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const Coalgebra c = random_mixed(rng, t);
    CHECK(twisted(delta_L(c)) == scaled(delta_L(c), -1));
  }
}

TEST_CASE("Lie coalgebras") {
  CHECK(is_lie_coalgebra(coalg("L*")).holds);
  const Verdict d = is_lie_coalgebra(coalg("D*"));
  REQUIRE_FALSE(d.holds);
  CHECK(d.witness->clause == "antisymmetry");
  CHECK(d.witness->basis == std::vector<std::size_t>{1});
  CHECK(is_lie_coalgebra(Coalgebra(2)).holds);
}

TEST_CASE("Lie-admissible coalgebras") {
  CHECK(is_lie_admissible_coalgebra(coalg("D*")).holds);
  CHECK(is_lie_admissible_coalgebra(coalg("L*")).holds);
  CHECK(is_lie_coalgebra(delta_L(coalg("L*"))).holds);
  CHECK_FALSE(is_lie_admissible_coalgebra(coalg("N*")).holds);

  testing::Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const Coalgebra c = testing::random_coalgebra(rng, 2);
    CHECK(is_lie_admissible_coalgebra(c).holds == is_lie_coalgebra(delta_L(c)).holds);
  }
}

TEST_CASE("G_i-coalgebras") {
  CHECK(is_gi_coalgebra(coalg("D*"), 1).holds);
  CHECK(is_gi_coalgebra(coalg("L*"), 6).holds);
  CHECK(is_gi_coalgebra(coalg("W*"), 2).holds);
  CHECK(is_gi_coalgebra(coalg("V*"), 2).holds);
  CHECK_FALSE(is_gi_coalgebra(coalg("V*"), 1).holds);
  CHECK(is_gi_coalgebra(coalg("P*"), 3).holds);
  CHECK_THROWS_AS(is_gi_coalgebra(coalg("D*"), 0), std::out_of_range);
  CHECK_THROWS_AS(is_gi_coalgebra(coalg("D*"), 7), std::out_of_range);
  for (int i = 1; i <= 6; ++i)
    CHECK(satisfies_v_corelation(coalg("V*"), sigma3::alternating_vector(i)).holds ==
          is_gi_coalgebra(coalg("V*"), i).holds);
}

TEST_CASE("G_i^! coalgebras") {
  for (int i = 1; i <= 6; ++i) CHECK(is_gi_shriek_coalgebra(coalg("D*"), i).holds);
  for (const auto& e : catalog_entries())
    if (std::holds_alternative<Coalgebra>(e.structure)) {
      const auto& c = std::get<Coalgebra>(e.structure);
      CHECK(is_gi_shriek_coalgebra(c, 1).holds == is_gi_coalgebra(c, 1).holds);
      CHECK(is_gi_shriek_coalgebra(c, 1, ShriekForm::literal).holds == is_gi_coalgebra(c, 1).holds);
    }

  const Verdict l = is_gi_shriek_coalgebra(coalg("L*"), 2);
  REQUIRE_FALSE(l.holds);
  CHECK(l.witness->clause == "coassociativity");
  CHECK(l.witness->basis == std::vector<std::size_t>{2});

  // W* is coassociative but X(f1) = f1⊗f2⊗f2 is not τ12-invariant.
  const Verdict w = is_gi_shriek_coalgebra(coalg("W*"), 2);
  REQUIRE_FALSE(w.holds);
  CHECK(w.witness->clause == "invariance of X");
  CHECK(w.witness->perm == Perm::tau12());
  CHECK(is_gi_shriek_coalgebra(coalg("W*"), 3).holds);

  // The unnormalized form forces Φ_{τ12} X = 0, which the symmetric X of D* violates.
  const Verdict literal = is_gi_shriek_coalgebra(coalg("D*"), 2, ShriekForm::literal);
  REQUIRE_FALSE(literal.holds);
  CHECK(literal.witness->clause == "u_i fixes X");
  CHECK(is_gi_shriek_coalgebra(Coalgebra(2), 6, ShriekForm::literal).holds);
  CHECK_THROWS_AS(is_gi_shriek_coalgebra(coalg("D*"), 0), std::out_of_range);
}

TEST_CASE("twist identity") {
  for (const auto& t : twist_coassociator_identity_defect(Coalgebra(2))) CHECK(t.is_zero());
  for (const auto& t : twist_coassociator_identity_defect(coalg("D*"))) CHECK(t.is_zero());
  testing::Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const Coalgebra c = testing::random_coalgebra(rng, testing::draw_dim(rng, 1, 4));
    for (const auto& d : twist_coassociator_identity_defect(c)) CHECK(d.is_zero());
  }
}

TEST_CASE("Lie-admissible iff Delta_L is a Lie coalgebra") {
  testing::Rng rng(4);
  int yes = 0, no = 0;
  for (int t = 0; t < 200; ++t) {
    const Coalgebra c = random_mixed(rng, t);
    const bool admissible = is_lie_admissible_coalgebra(c).holds;
    CHECK(admissible == is_lie_coalgebra(delta_L(c)).holds);
    (admissible ? yes : no)++;
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("bridge identity: cyclic sum of Ã(Δ_L) is twice Φ_V Ã(Δ)") {
  const GroupVector cyclic =
      GroupVector::of(Perm::identity()) + GroupVector::of(Perm::c1()) + GroupVector::of(Perm::c2());
  testing::Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const Coalgebra c = random_mixed(rng, t);
    const Coalgebra l = delta_L(c);
    const oracle::Coalg ref(c);
    for (std::size_t k = 0; k < c.dim(); ++k) {
      const Tensor3 lhs = sigma3::phi_vector(cyclic, coassociator(l, unit(c.dim(), k)));
      const Tensor3 rhs = Rat(2) * sigma3::phi_vector(GroupVector::sign_vector(), coassociator(c, unit(c.dim(), k)));
      CHECK(lhs == rhs);
      if (t < 20)
        for (std::size_t f = 0; f < lhs.size(); ++f) {
          const auto [a, b, z] = lhs.unflatten(f);
          CHECK(oracle::bridge_lhs(ref, k, a, b, z) == oracle::bridge_rhs(ref, k, a, b, z));
          CHECK(lhs[f] == oracle::bridge_lhs(ref, k, a, b, z));
        }
    }
  }
}

TEST_CASE("G_i-coalgebras in the catalog are Lie-admissible") {
  for (const auto& e : catalog_entries()) {
    if (!std::holds_alternative<Coalgebra>(e.structure)) continue;
    const auto& c = std::get<Coalgebra>(e.structure);
    for (int i = 1; i <= 6; ++i)
      if (is_gi_coalgebra(c, i).holds) CHECK_MESSAGE(is_lie_admissible_coalgebra(c).holds, e.name);
  }
}

TEST_CASE("coalgebra predicate_report") {
  const auto report = predicate_report(coalg("L*"));
  REQUIRE(report.size() == 15);
  CHECK(report[0].name == "G1");
  CHECK(report[6].name == "lie-admissible");
  CHECK(report[7].name == "G1!");
  CHECK(report[13].name == "lie");
  CHECK(report[14].name == "delta-L-lie");
  CHECK(report[13].verdict.holds);
  CHECK_THROWS_AS(Coalgebra(0), std::invalid_argument);
}
