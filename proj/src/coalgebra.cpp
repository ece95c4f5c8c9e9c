#include "nacog/coalgebra.hpp"

#include <stdexcept>
#include <string>

namespace nacog {

using sigma3::GroupVector;
using sigma3::Perm;

Coalgebra::Coalgebra(std::size_t n) : n_(n), d_(n * n * n) {
  if (n == 0) throw std::invalid_argument("coalgebra dimension must be at least 1");
}

namespace {

void require_dim(const Coalgebra& c, std::span<const Rat> x) {
  if (x.size() != c.dim())
    throw std::invalid_argument("vector of dimension " + std::to_string(x.size()) +
                                " used with coalgebra of dimension " + std::to_string(c.dim()));
}

RatVector unit(std::size_t n, std::size_t k) {
  RatVector e(n);
  e[k] = 1;
  return e;
}

}  // namespace

Tensor2 comultiply(const Coalgebra& c, std::span<const Rat> x) {
  require_dim(c, x);
  const std::size_t n = c.dim();
  Tensor2 out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!c.constant(k, i, j).is_zero()) out.at({i, j}) += x[k] * c.constant(k, i, j);
  }
  return out;
}

namespace {

// (Δ⊗Id)Δ(x) when left is true, (Id⊗Δ)Δ(x) otherwise.
Tensor3 iterate(const Coalgebra& c, std::span<const Rat> x, bool left) {
  const std::size_t n = c.dim();
  const Tensor2 first = comultiply(c, x);
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& s = first.at({i, j});
      if (s.is_zero()) continue;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (left) {
            if (!c.constant(i, a, b).is_zero()) out.at({a, b, j}) += s * c.constant(i, a, b);
          } else {
            if (!c.constant(j, a, b).is_zero()) out.at({i, a, b}) += s * c.constant(j, a, b);
          }
        }
    }
  return out;
}

}  // namespace

Tensor3 coassociator(const Coalgebra& c, std::span<const Rat> x) {
  return iterate(c, x, true) - iterate(c, x, false);
}

Tensor3 iterated_coproduct(const Coalgebra& c, std::span<const Rat> x) { return iterate(c, x, false); }

Coalgebra twisted(const Coalgebra& c) {
  const std::size_t n = c.dim();
  Coalgebra out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.constant(k, i, j) = c.constant(k, j, i);
  return out;
}

Coalgebra delta_L(const Coalgebra& c) {
  const std::size_t n = c.dim();
  Coalgebra out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out.constant(k, i, j) = c.constant(k, i, j) - c.constant(k, j, i);
  return out;
}

Verdict satisfies_v_corelation(const Coalgebra& c, const GroupVector& v) {
  if (v.is_zero()) return Verdict::pass();
  for (std::size_t k = 0; k < c.dim(); ++k) {
    const Tensor3 d = sigma3::phi_vector(v, coassociator(c, unit(c.dim(), k)));
    if (!d.is_zero()) return Verdict::fail({"coassociator relation", {k + 1}, {}, d.coefficients()});
  }
  return Verdict::pass();
}

Verdict is_lie_coalgebra(const Coalgebra& c) {
  const std::size_t n = c.dim();
  for (std::size_t k = 0; k < n; ++k) {
    Tensor2 d(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d.at({i, j}) = c.constant(k, i, j) + c.constant(k, j, i);
    if (!d.is_zero()) return Verdict::fail({"antisymmetry", {k + 1}, {}, d.coefficients()});
  }
  const GroupVector cyclic =
      GroupVector::of(Perm::identity()) + GroupVector::of(Perm::c1()) + GroupVector::of(Perm::c2());
  Verdict jacobi = satisfies_v_corelation(c, cyclic);
  if (!jacobi) jacobi.witness->clause = "co-jacobi";
  return jacobi;
}

Verdict is_lie_admissible_coalgebra(const Coalgebra& c) {
  return satisfies_v_corelation(c, GroupVector::sign_vector());
}

Verdict is_gi_coalgebra(const Coalgebra& c, int i) {
  return satisfies_v_corelation(c, sigma3::alternating_vector(i));
}

Verdict is_gi_shriek_coalgebra(const Coalgebra& c, int i, ShriekForm form) {
  const std::vector<Perm> group = sigma3::subgroup_elements(i);
  Verdict coassoc = is_gi_coalgebra(c, 1);
  if (!coassoc) {
    coassoc.witness->clause = "coassociativity";
    return coassoc;
  }
  for (std::size_t k = 0; k < c.dim(); ++k) {
    const Tensor3 x = iterated_coproduct(c, unit(c.dim(), k));
    if (form == ShriekForm::literal) {
      const Tensor3 d = sigma3::phi_vector(sigma3::symmetrizing_vector(i), x) - x;
      if (!d.is_zero()) return Verdict::fail({"u_i fixes X", {k + 1}, {}, d.coefficients()});
      continue;
    }
    for (const auto& p : group) {
      if (p == Perm::identity()) continue;
      const Tensor3 d = sigma3::phi_perm(p, x) - x;
      if (!d.is_zero()) return Verdict::fail({"invariance of X", {k + 1}, p, d.coefficients()});
    }
  }
  return Verdict::pass();
}

std::vector<Tensor3> twist_coassociator_identity_defect(const Coalgebra& c) {
  const Coalgebra t = twisted(c);
  std::vector<Tensor3> defects;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    const RatVector e = unit(c.dim(), k);
    defects.push_back(coassociator(t, e) + sigma3::phi_perm(Perm::tau13(), coassociator(c, e)));
  }
  return defects;
}

std::vector<PredicateResult> predicate_report(const Coalgebra& c, ShriekForm form) {
  std::vector<PredicateResult> report;
  for (int i = 1; i <= 6; ++i) report.push_back({"G" + std::to_string(i), is_gi_coalgebra(c, i)});
  report.push_back({"lie-admissible", is_lie_admissible_coalgebra(c)});
  for (int i = 1; i <= 6; ++i)
    report.push_back({"G" + std::to_string(i) + "!", is_gi_shriek_coalgebra(c, i, form)});
  report.push_back({"lie", is_lie_coalgebra(c)});
  report.push_back({"delta-L-lie", is_lie_coalgebra(delta_L(c))});
  return report;
}

}  // namespace nacog
