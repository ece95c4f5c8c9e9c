#include "nacog/bialgebra.hpp"

#include <stdexcept>
#include <string>

namespace nacog {

namespace {

RatVector unit(std::size_t n, std::size_t k) {
  RatVector e(n);
  e[k] = 1;
  return e;
}

Verdict relabel(Verdict v, const char* clause) {
  if (!v) v.witness->clause = clause;
  return v;
}

}  // namespace

BialgebraCandidate::BialgebraCandidate(Algebra a, Coalgebra c) : a_(std::move(a)), c_(std::move(c)) {
  if (a_.dim() != c_.dim())
    throw std::invalid_argument("bialgebra: algebra has dimension " + std::to_string(a_.dim()) +
                                " but coalgebra has dimension " + std::to_string(c_.dim()));
}

Verdict lie_admissible_compatibility(const BialgebraCandidate& b) {
  const std::size_t n = b.dim();
  const auto v6 = sigma3::alternating_vector(6);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const RatVector alt = relation_defect(b.algebra(), v6, unit(n, x), unit(n, y), unit(n, z));
        const Tensor2 d = comultiply(b.coalgebra(), alt);
        if (!d.is_zero())
          return Verdict::fail({"comultiplied alternated associator", {x + 1, y + 1, z + 1}, {}, d.coefficients()});
      }
  return Verdict::pass();
}

Verdict check_lie_admissible_bialgebra(const BialgebraCandidate& b) {
  if (Verdict v = is_lie_admissible(b.algebra()); !v) return relabel(std::move(v), "algebra lie-admissible");
  if (Verdict v = is_lie_admissible_coalgebra(b.coalgebra()); !v)
    return relabel(std::move(v), "coalgebra lie-admissible");
  return lie_admissible_compatibility(b);
}

Tensor2 prelie_compat_defect(const BialgebraCandidate& b, std::span<const Rat> x,
                             std::span<const Rat> y) {
  const Algebra& a = b.algebra();
  const std::size_t n = b.dim();
  Tensor2 d = comultiply(b.coalgebra(), multiply(a, x, y));
  const Tensor2 split = comultiply(b.coalgebra(), x);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& s = split.at({i, j});
      if (s.is_zero()) continue;
      // (Id⊗μ)(e_i⊗e_j⊗y) = e_i ⊗ e_j y
      const RatVector right = multiply(a, unit(n, j), y);
      // (μ⊗Id)Φ_{τ23}(e_i⊗e_j⊗y) = e_i y ⊗ e_j
      const RatVector left = multiply(a, unit(n, i), y);
      for (std::size_t m = 0; m < n; ++m) {
        d.at({i, m}) -= s * right[m];
        d.at({m, j}) -= s * left[m];
      }
    }
  return d;
}

Verdict check_prelie_bialgebra_compat(const BialgebraCandidate& b) {
  const std::size_t n = b.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Tensor2 d = prelie_compat_defect(b, unit(n, x), unit(n, y));
      if (!d.is_zero()) return Verdict::fail({"pre-lie compatibility", {x + 1, y + 1}, {}, d.coefficients()});
    }
  return Verdict::pass();
}

Verdict check_prelie_bialgebra(const BialgebraCandidate& b) {
  if (Verdict v = is_gi_associative(b.algebra(), 3); !v) return relabel(std::move(v), "algebra G3");
  if (Verdict v = is_gi_coalgebra(b.coalgebra(), 3); !v) return relabel(std::move(v), "coalgebra G3");
  return check_prelie_bialgebra_compat(b);
}

}  // namespace nacog
