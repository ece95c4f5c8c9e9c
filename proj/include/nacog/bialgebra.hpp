#ifndef NACOG_BIALGEBRA_HPP
#define NACOG_BIALGEBRA_HPP

#include <span>

#include "nacog/algebra.hpp"
#include "nacog/coalgebra.hpp"

namespace nacog {

/// A multiplication and a comultiplication on one module.
class BialgebraCandidate {
public:
  /// Throws std::invalid_argument when the dimensions differ.
  BialgebraCandidate(Algebra a, Coalgebra c);

  const Algebra& algebra() const { return a_; }
  const Coalgebra& coalgebra() const { return c_; }
  std::size_t dim() const { return a_.dim(); }

private:
  Algebra a_;
  Coalgebra c_;
};

/// Δ∘A(μ)∘Φ_{G₆} = 0 on basis triples. Implied by Lie-admissibility of μ.
Verdict lie_admissible_compatibility(const BialgebraCandidate& b);

/// μ Lie-admissible, Δ Lie-admissible, and the compatibility clause.
Verdict check_lie_admissible_bialgebra(const BialgebraCandidate& b);

/// Δ(xy) − (Id⊗μ)(Δx⊗y) − (μ⊗Id)Φ_{τ23}(Δx⊗y), flattened over M⊗M.
Tensor2 prelie_compat_defect(const BialgebraCandidate& b, std::span<const Rat> x,
                             std::span<const Rat> y);

/// Δ∘μ = (Id⊗μ)∘(Δ⊗Id) + (μ⊗Id)∘Φ_{τ23}∘(Δ⊗Id) on basis pairs.
Verdict check_prelie_bialgebra_compat(const BialgebraCandidate& b);

/// G₃-associative μ, G₃-coalgebra Δ, and the pre-Lie compatibility.
Verdict check_prelie_bialgebra(const BialgebraCandidate& b);

}  // namespace nacog

#endif  // NACOG_BIALGEBRA_HPP
