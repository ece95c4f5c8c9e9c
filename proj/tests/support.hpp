#ifndef NACOG_TESTS_SUPPORT_HPP
#define NACOG_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>

#include "nacog/algebra.hpp"
#include "nacog/coalgebra.hpp"
#include "nacog/sigma3.hpp"
#include "nacog/tensor.hpp"

namespace testing {

using Rng = std::mt19937_64;

inline long draw(Rng& rng, int lo, int hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline std::size_t draw_dim(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(draw(rng, static_cast<int>(lo), static_cast<int>(hi)));
}

inline nacog::RatVector random_vector(Rng& rng, std::size_t n, int bound = 5) {
  nacog::RatVector v(n);
  for (auto& x : v) x = draw(rng, -bound, bound);
  return v;
}

inline nacog::Algebra random_algebra(Rng& rng, std::size_t n, int bound = 3) {
  nacog::Algebra a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a.constant(i, j, k) = draw(rng, -bound, bound);
  return a;
}

/// Sparse variant: each constant is nonzero with probability about 1/4, so
/// identities hold often enough for both verdicts to be exercised.
inline nacog::Algebra random_sparse_algebra(Rng& rng, std::size_t n, int bound = 2) {
  nacog::Algebra a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (rng() % 4 == 0) a.constant(i, j, k) = draw(rng, -bound, bound);
  return a;
}

inline nacog::Coalgebra random_coalgebra(Rng& rng, std::size_t n, int bound = 3) {
  nacog::Coalgebra c(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c.constant(k, i, j) = draw(rng, -bound, bound);
  return c;
}

inline nacog::Coalgebra random_sparse_coalgebra(Rng& rng, std::size_t n, int bound = 2) {
  nacog::Coalgebra c(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() % 4 == 0) c.constant(k, i, j) = draw(rng, -bound, bound);
  return c;
}

inline nacog::Tensor3 random_tensor3(Rng& rng, std::size_t n, int bound = 4) {
  nacog::Tensor3 t(n);
  for (std::size_t f = 0; f < t.size(); ++f) t[f] = draw(rng, -bound, bound);
  return t;
}

inline nacog::sigma3::GroupVector random_group_vector(Rng& rng, int bound = 3) {
  std::array<nacog::Rat, 6> c;
  for (auto& x : c) x = draw(rng, -bound, bound);
  return nacog::sigma3::GroupVector(c);
}

inline nacog::RatVector unit(std::size_t n, std::size_t k) {
  nacog::RatVector e(n);
  e[k] = 1;
  return e;
}

}  // namespace testing

#endif  // NACOG_TESTS_SUPPORT_HPP
