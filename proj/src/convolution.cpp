#include "nacog/convolution.hpp"

#include <stdexcept>

namespace nacog {

HomElement HomElement::unit(std::size_t target_dim, std::size_t source_dim, std::size_t p,
                            std::size_t q) {
  HomElement e(target_dim, source_dim);
  e(p, q) = 1;
  return e;
}

HomElement convolve(const HomElement& f, const HomElement& g, const Coalgebra& c, const Algebra& a) {
  if (f.target_dim() != a.dim() || g.target_dim() != a.dim() || f.source_dim() != c.dim() ||
      g.source_dim() != c.dim())
    throw std::invalid_argument("convolve: Hom element shape does not match (A, C)");
  const std::size_t na = a.dim(), nc = c.dim();
  HomElement out(na, nc);
  for (std::size_t q = 0; q < nc; ++q) {
    RatVector value(na);
    for (std::size_t i = 0; i < nc; ++i)
      for (std::size_t j = 0; j < nc; ++j) {
        const Rat& s = c.constant(q, i, j);
        if (s.is_zero()) continue;
        RatVector fi(na), gj(na);
        for (std::size_t p = 0; p < na; ++p) {
          fi[p] = f(p, i);
          gj[p] = g(p, j);
        }
        const RatVector prod = multiply(a, fi, gj);
        for (std::size_t p = 0; p < na; ++p) value[p] += s * prod[p];
      }
    for (std::size_t p = 0; p < na; ++p) out(p, q) = value[p];
  }
  return out;
}

RatVector hom_coordinates(const HomElement& f) {
  RatVector v;
  v.reserve(f.target_dim() * f.source_dim());
  for (std::size_t p = 0; p < f.target_dim(); ++p)
    for (std::size_t q = 0; q < f.source_dim(); ++q) v.push_back(f(p, q));
  return v;
}

HomElement hom_from_coordinates(std::size_t target_dim, std::size_t source_dim,
                                std::span<const Rat> coords) {
  if (coords.size() != target_dim * source_dim)
    throw std::invalid_argument("hom_from_coordinates: expected " +
                                std::to_string(target_dim * source_dim) + " coordinates");
  HomElement f(target_dim, source_dim);
  for (std::size_t p = 0; p < target_dim; ++p)
    for (std::size_t q = 0; q < source_dim; ++q) f(p, q) = coords[p * source_dim + q];
  return f;
}

Algebra convolution_algebra(const Coalgebra& c, const Algebra& a) {
  const std::size_t na = a.dim(), nc = c.dim();
  const std::size_t n = na * nc;
  Algebra out(n);
  for (std::size_t x = 0; x < n; ++x) {
    const HomElement ex = HomElement::unit(na, nc, x / nc, x % nc);
    for (std::size_t y = 0; y < n; ++y) {
      const HomElement ey = HomElement::unit(na, nc, y / nc, y % nc);
      const RatVector prod = hom_coordinates(convolve(ex, ey, c, a));
      for (std::size_t z = 0; z < n; ++z) out.constant(x, y, z) = prod[z];
    }
  }
  return out;
}

}  // namespace nacog
