#ifndef NACOG_CONVOLUTION_HPP
#define NACOG_CONVOLUTION_HPP

#include <cstddef>

#include "nacog/algebra.hpp"
#include "nacog/coalgebra.hpp"
#include "nacog/linalg.hpp"

namespace nacog {

/// Linear map C → A as an n_A × n_C matrix.
class HomElement {
public:
  HomElement(std::size_t target_dim, std::size_t source_dim) : m_(target_dim, source_dim) {}
  explicit HomElement(RatMatrix m) : m_(std::move(m)) {}

  /// E_pq: sends basis vector q of C to basis vector p of A.
  static HomElement unit(std::size_t target_dim, std::size_t source_dim, std::size_t p, std::size_t q);

  std::size_t target_dim() const { return m_.rows(); }
  std::size_t source_dim() const { return m_.cols(); }

  Rat& operator()(std::size_t p, std::size_t q) { return m_(p, q); }
  const Rat& operator()(std::size_t p, std::size_t q) const { return m_(p, q); }
  const RatMatrix& matrix() const { return m_; }

  RatVector apply(std::span<const Rat> x) const { return m_.apply(x); }

  friend bool operator==(const HomElement&, const HomElement&) = default;

private:
  RatMatrix m_;
};

/// f⋆g = μ ∘ λ₂(f⊗g) ∘ Δ. Throws std::invalid_argument on shape mismatch.
HomElement convolve(const HomElement& f, const HomElement& g, const Coalgebra& c, const Algebra& a);

/// (Hom(C, A), ⋆) on the basis E_pq ordered lexicographically by (p, q).
Algebra convolution_algebra(const Coalgebra& c, const Algebra& a);

/// Coordinates of f in the E_pq basis, and back.
RatVector hom_coordinates(const HomElement& f);
HomElement hom_from_coordinates(std::size_t target_dim, std::size_t source_dim,
                                std::span<const Rat> coords);

}  // namespace nacog

#endif  // NACOG_CONVOLUTION_HPP
