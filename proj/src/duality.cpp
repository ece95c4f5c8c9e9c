#include "nacog/duality.hpp"

#include <stdexcept>

namespace nacog {

Coalgebra dual_coalgebra(const Algebra& a) {
  const std::size_t n = a.dim();
  Coalgebra c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c.constant(k, i, j) = a.constant(i, j, k);
  return c;
}

Algebra dual_algebra(const Coalgebra& c) {
  const std::size_t n = c.dim();
  Algebra a(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a.constant(i, j, k) = c.constant(k, i, j);
  return a;
}

bool roundtrip_check(const Algebra& a) { return dual_algebra(dual_coalgebra(a)) == a; }

RatVector dual_product(const Coalgebra& c, std::span<const Rat> f1, std::span<const Rat> f2) {
  const std::size_t n = c.dim();
  if (f1.size() != n || f2.size() != n) throw std::invalid_argument("dual_product: dimension mismatch");
  RatVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    RatVector e(n);
    e[k] = 1;
    // λ₂(f₁⊗f₂) applied to Δ(e_k), followed by μ_R.
    const Tensor2 split = comultiply(c, e);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[k] += f1[i] * f2[j] * split.at({i, j});
  }
  return out;
}

Tensor2 dual_coproduct(const Algebra& a, std::span<const Rat> f) {
  const std::size_t n = a.dim();
  if (f.size() != n) throw std::invalid_argument("dual_coproduct: dimension mismatch");
  Tensor2 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RatVector p = a.basis_product(i, j);
      Rat value;
      for (std::size_t k = 0; k < n; ++k) value += f[k] * p[k];
      out.at({i, j}) = value;
    }
  return out;
}

}  // namespace nacog
