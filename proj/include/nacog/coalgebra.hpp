#ifndef NACOG_COALGEBRA_HPP
#define NACOG_COALGEBRA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nacog/linalg.hpp"
#include "nacog/sigma3.hpp"
#include "nacog/tensor.hpp"
#include "nacog/witness.hpp"

namespace nacog {

/// Finite-dimensional coalgebra, Δ(e_k) = Σ_{i,j} D^k_ij e_i ⊗ e_j.
/// Indices are 0-based in this API.
class Coalgebra {
public:
  /// Zero coalgebra of dimension n. Throws std::invalid_argument when n = 0.
  explicit Coalgebra(std::size_t n);

  std::size_t dim() const { return n_; }

  Rat& constant(std::size_t k, std::size_t i, std::size_t j) { return d_[(k * n_ + i) * n_ + j]; }
  const Rat& constant(std::size_t k, std::size_t i, std::size_t j) const {
    return d_[(k * n_ + i) * n_ + j];
  }

  bool is_zero() const { return nacog::is_zero(d_); }

  friend bool operator==(const Coalgebra&, const Coalgebra&) = default;

private:
  std::size_t n_;
  std::vector<Rat> d_;
};

/// Δ(x). Throws std::invalid_argument on dimension mismatch.
Tensor2 comultiply(const Coalgebra& c, std::span<const Rat> x);

/// Ã(Δ)(x) = (Δ⊗Id)Δ(x) − (Id⊗Δ)Δ(x).
Tensor3 coassociator(const Coalgebra& c, std::span<const Rat> x);

/// (Id⊗Δ)Δ(x).
Tensor3 iterated_coproduct(const Coalgebra& c, std::span<const Rat> x);

/// τ∘Δ.
Coalgebra twisted(const Coalgebra& c);
/// Δ_L = Δ − τ∘Δ.
Coalgebra delta_L(const Coalgebra& c);

/// Φ_v∘Ã(Δ) = 0 on every basis vector; the witness is the first failing one.
Verdict satisfies_v_corelation(const Coalgebra& c, const sigma3::GroupVector& v);

/// τ∘Δ = −Δ and (Id + Φ_{c1} + Φ_{c2})∘Ã(Δ) = 0.
Verdict is_lie_coalgebra(const Coalgebra& c);

/// Φ_V∘Ã(Δ) = 0 with V the signed sum over Σ₃.
Verdict is_lie_admissible_coalgebra(const Coalgebra& c);

/// Σ_{σ∈G_i} ε(σ) Φ_σ∘Ã(Δ) = 0. Throws std::out_of_range for i outside 1..6.
Verdict is_gi_coalgebra(const Coalgebra& c, int i);

enum class ShriekForm {
  /// Φ_σ X = X for every σ ∈ G_i.
  invariance,
  /// Φ_{u_i} X = X with the unnormalized u_i = Σ σ⁻¹.
  literal,
};

/// Coassociativity plus the G_i condition on X = (Id⊗Δ)∘Δ.
/// Throws std::out_of_range for i outside 1..6.
Verdict is_gi_shriek_coalgebra(const Coalgebra& c, int i, ShriekForm form = ShriekForm::invariance);

/// Ã(τ∘Δ)(e_k) + Φ_{τ13}(Ã(Δ)(e_k)) for each basis vector; identically zero.
std::vector<Tensor3> twist_coassociator_identity_defect(const Coalgebra& c);

/// G1..G6, lie-admissible, G1!..G6!, lie, delta-L-lie, in that order.
std::vector<PredicateResult> predicate_report(const Coalgebra& c,
                                              ShriekForm form = ShriekForm::invariance);

}  // namespace nacog

#endif  // NACOG_COALGEBRA_HPP
