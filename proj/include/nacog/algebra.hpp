#ifndef NACOG_ALGEBRA_HPP
#define NACOG_ALGEBRA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nacog/linalg.hpp"
#include "nacog/sigma3.hpp"
#include "nacog/witness.hpp"

namespace nacog {

/// Finite-dimensional algebra given by structure constants,
/// e_i e_j = Σ_k C_ij^k e_k. Indices are 0-based in this API.
class Algebra {
public:
  /// Zero algebra of dimension n. Throws std::invalid_argument when n = 0.
  explicit Algebra(std::size_t n);

  std::size_t dim() const { return n_; }

  Rat& constant(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  const Rat& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }

  /// Coordinates of e_i e_j.
  RatVector basis_product(std::size_t i, std::size_t j) const;

  bool is_zero() const { return nacog::is_zero(c_); }

  friend bool operator==(const Algebra&, const Algebra&) = default;

private:
  std::size_t n_;
  std::vector<Rat> c_;
};

/// μ(x, y). Throws std::invalid_argument on dimension mismatch.
RatVector multiply(const Algebra& a, std::span<const Rat> x, std::span<const Rat> y);

/// (xy)z − x(yz).
RatVector associator(const Algebra& a, std::span<const Rat> x, std::span<const Rat> y,
                     std::span<const Rat> z);

/// (A(μ)∘Φ_v)(x⊗y⊗z) = Σ_σ a_σ A(x_{σ⁻¹(1)}, x_{σ⁻¹(2)}, x_{σ⁻¹(3)}).
RatVector relation_defect(const Algebra& a, const sigma3::GroupVector& v, std::span<const Rat> x,
                          std::span<const Rat> y, std::span<const Rat> z);

/// A(μ)∘Φ_v = 0, decided on basis triples; the witness is the
/// lexicographically first failing triple.
Verdict satisfies_v_relation(const Algebra& a, const sigma3::GroupVector& v);

/// A(μ)∘Φ_{G_i} = 0. Throws std::out_of_range for i outside 1..6.
Verdict is_gi_associative(const Algebra& a, int i);
Verdict is_lie_admissible(const Algebra& a);

/// Constants C_ij^k − C_ji^k of the commutator bracket.
Algebra commutator_algebra(const Algebra& a);

/// Antisymmetry on basis pairs, then the Jacobi sum on basis triples.
Verdict is_lie(const Algebra& a);

/// Relation given by the all-ones vector Σσ.
Verdict is_power3_associative(const Algebra& a);

/// (x,x,x) = 0 for a generic x = Σ t_i e_i, expanded as a cubic polynomial
/// in the t_i. The witness basis lists the exponent multiset of the first
/// monomial whose coefficient is nonzero.
Verdict power3_cube_check(const Algebra& a);

/// Associativity together with x1x2x3 = x_{σ(1)}x_{σ(2)}x_{σ(3)} for every
/// σ ∈ G_i. Throws std::out_of_range for i outside 2..6.
Verdict is_gi_shriek_algebra(const Algebra& a, int i);

/// G1..G6, lie-admissible, power3, G2!..G6!, commutator-lie, in that order.
std::vector<PredicateResult> predicate_report(const Algebra& a);

}  // namespace nacog

#endif  // NACOG_ALGEBRA_HPP
