#ifndef NACOG_SIGMA3_HPP
#define NACOG_SIGMA3_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nacog/rational.hpp"
#include "nacog/tensor.hpp"

namespace nacog::sigma3 {

/// Permutation of {1,2,3} stored by its one-line images (0-based).
class Perm {
public:
  constexpr Perm() = default;
  /// Images given 1-based, e.g. Perm(2, 3, 1) is the cycle 1→2→3→1.
  /// Throws std::invalid_argument unless the images form a permutation.
  Perm(int image1, int image2, int image3);

  static const Perm& identity();
  static const Perm& tau12();
  static const Perm& tau13();
  static const Perm& tau23();
  /// 1→2, 2→3, 3→1.
  static const Perm& c1();
  /// Inverse of c1.
  static const Perm& c2();

  /// 0-based image of the 0-based point x.
  std::size_t operator()(std::size_t x) const { return images_[x]; }

  /// Position in the canonical order (Id, τ12, τ13, τ23, c1, c2).
  std::size_t index() const;
  /// "Id", "tau12", "tau13", "tau23", "c1" or "c2".
  std::string_view name() const;

  friend bool operator==(const Perm&, const Perm&) = default;

private:
  std::array<std::uint8_t, 3> images_{0, 1, 2};
};

/// The six permutations in canonical order.
const std::array<Perm, 6>& all_perms();

/// (p∘q)(x) = p(q(x)).
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
int sign(const Perm& p);

/// Slot permutation underlying Φ_σ: output slot s carries input slot σ⁻¹(s).
template <typename T>
std::array<T, 3> permute_slots(const Perm& p, const std::array<T, 3>& slots) {
  const Perm inv = inverse(p);
  return {slots[inv(0)], slots[inv(1)], slots[inv(2)]};
}

/// Element Σ a_σ σ of the rational group algebra of Σ₃, coefficients in
/// canonical permutation order.
class GroupVector {
public:
  GroupVector() = default;
  explicit GroupVector(std::array<Rat, 6> coefficients) : coeffs_(std::move(coefficients)) {}

  static GroupVector of(const Perm& p);
  static GroupVector all_ones();
  /// V = Id − τ12 − τ13 − τ23 + c1 + c2.
  static GroupVector sign_vector();

  /// Six comma-separated rationals in canonical order. Throws
  /// std::invalid_argument on malformed input.
  static GroupVector parse(std::string_view text);
  std::string to_string() const;

  const Rat& operator[](const Perm& p) const { return coeffs_[p.index()]; }
  Rat& operator[](const Perm& p) { return coeffs_[p.index()]; }
  const std::array<Rat, 6>& coefficients() const { return coeffs_; }
  RatVector as_vector() const { return RatVector(coeffs_.begin(), coeffs_.end()); }
  static GroupVector from_vector(const RatVector& v);

  bool is_zero() const;

  GroupVector& operator+=(const GroupVector& rhs);
  GroupVector& operator-=(const GroupVector& rhs);
  GroupVector& operator*=(const Rat& s);
  friend GroupVector operator+(GroupVector a, const GroupVector& b) { return a += b; }
  friend GroupVector operator-(GroupVector a, const GroupVector& b) { return a -= b; }
  friend GroupVector operator*(const Rat& s, GroupVector v) { return v *= s; }
  /// Product induced by composition in Σ₃.
  friend GroupVector operator*(const GroupVector& a, const GroupVector& b);
  friend bool operator==(const GroupVector&, const GroupVector&) = default;

private:
  std::array<Rat, 6> coeffs_{};
};

/// Φ_σ on M^{⊗3}.
Tensor3 phi_perm(const Perm& p, const Tensor3& t);
/// Φ_v = Σ a_σ Φ_σ.
Tensor3 phi_vector(const GroupVector& v, const Tensor3& t);

/// G₁ = {Id}, G₂ = {Id, τ12}, G₃ = {Id, τ23}, G₄ = {Id, τ13},
/// G₅ = {Id, c1, c2}, G₆ = Σ₃; elements in canonical order.
/// Throws std::out_of_range for i outside 1..6.
std::vector<Perm> subgroup_elements(int i);
/// v_i = Σ_{σ∈G_i} ε(σ) σ.
GroupVector alternating_vector(int i);
/// u_i = Σ_{σ∈G_i} σ⁻¹.
GroupVector symmetrizing_vector(int i);

/// v·σ for the six σ in canonical order, duplicates kept.
std::vector<GroupVector> right_orbit(const GroupVector& v);
/// Reduced echelon basis of F_v = span O(v).
std::vector<GroupVector> invariant_subspace(const GroupVector& v);

struct IsotypicDimensions {
  std::size_t trivial = 0;
  std::size_t sign = 0;
  std::size_t standard = 0;
  friend bool operator==(const IsotypicDimensions&, const IsotypicDimensions&) = default;
};

/// Central idempotents of the three isotypic components.
GroupVector trivial_idempotent();
GroupVector sign_idempotent();
GroupVector standard_idempotent();

/// Dimensions of the intersections of span(basis) with the trivial, sign and
/// standard isotypic components. Throws std::invalid_argument naming the
/// offending permutation when span(basis) is not closed under right
/// multiplication.
IsotypicDimensions isotypic_dimensions(const std::vector<GroupVector>& basis);

/// Generators of every right-invariant line of K[Σ₃], each scaled so its
/// first nonzero coefficient is 1: the all-ones vector and V.
std::vector<GroupVector> one_dimensional_invariants();

}  // namespace nacog::sigma3

#endif  // NACOG_SIGMA3_HPP
