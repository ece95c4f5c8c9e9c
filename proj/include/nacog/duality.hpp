#ifndef NACOG_DUALITY_HPP
#define NACOG_DUALITY_HPP

#include <span>

#include "nacog/algebra.hpp"
#include "nacog/coalgebra.hpp"

namespace nacog {

/// Coalgebra on M* with Δ(f_k) = Σ_{i,j} C_ij^k f_i ⊗ f_j.
Coalgebra dual_coalgebra(const Algebra& a);

/// Algebra on M* with μ(f₁⊗f₂) = μ_R ∘ λ₂(f₁⊗f₂) ∘ Δ.
Algebra dual_algebra(const Coalgebra& c);

/// dual_algebra(dual_coalgebra(a)) == a.
bool roundtrip_check(const Algebra& a);

/// Evaluation route for the dual product: the functional
/// x ↦ Σ f₁(x₍₁₎) f₂(x₍₂₎), in dual-basis coordinates.
RatVector dual_product(const Coalgebra& c, std::span<const Rat> f1, std::span<const Rat> f2);

/// Evaluation route for the dual coproduct: Σ_{i,j} f(e_i e_j) f_i ⊗ f_j.
Tensor2 dual_coproduct(const Algebra& a, std::span<const Rat> f);

}  // namespace nacog

#endif  // NACOG_DUALITY_HPP
