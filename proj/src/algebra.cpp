#include "nacog/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace nacog {

using sigma3::GroupVector;
using sigma3::Perm;

Algebra::Algebra(std::size_t n) : n_(n), c_(n * n * n) {
  if (n == 0) throw std::invalid_argument("algebra dimension must be at least 1");
}

RatVector Algebra::basis_product(std::size_t i, std::size_t j) const {
  const auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_);
  return RatVector(first, first + static_cast<std::ptrdiff_t>(n_));
}

namespace {

void require_dim(const Algebra& a, std::span<const Rat> x) {
  if (x.size() != a.dim())
    throw std::invalid_argument("vector of dimension " + std::to_string(x.size()) +
                                " used with algebra of dimension " + std::to_string(a.dim()));
}

void axpy(RatVector& y, const Rat& s, std::span<const Rat> x) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += s * x[i];
}

// Associator on every basis triple, indexed by (a·n + b)·n + c.
std::vector<RatVector> associator_table(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<RatVector> table;
  table.reserve(n * n * n);
  std::vector<RatVector> products;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products.push_back(a.basis_product(i, j));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        RatVector d(n);
        for (std::size_t m = 0; m < n; ++m) {
          axpy(d, products[x * n + y][m], products[m * n + z]);
          axpy(d, -products[y * n + z][m], products[x * n + m]);
        }
        table.push_back(std::move(d));
      }
  return table;
}

}  // namespace

RatVector multiply(const Algebra& a, std::span<const Rat> x, std::span<const Rat> y) {
  require_dim(a, x);
  require_dim(a, y);
  const std::size_t n = a.dim();
  RatVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rat s = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!a.constant(i, j, k).is_zero()) out[k] += s * a.constant(i, j, k);
    }
  }
  return out;
}

RatVector associator(const Algebra& a, std::span<const Rat> x, std::span<const Rat> y,
                     std::span<const Rat> z) {
  RatVector d = multiply(a, multiply(a, x, y), z);
  const RatVector right = multiply(a, x, multiply(a, y, z));
  for (std::size_t k = 0; k < d.size(); ++k) d[k] -= right[k];
  return d;
}

RatVector relation_defect(const Algebra& a, const GroupVector& v, std::span<const Rat> x,
                          std::span<const Rat> y, std::span<const Rat> z) {
  require_dim(a, x);
  require_dim(a, y);
  require_dim(a, z);
  const std::array<std::span<const Rat>, 3> slots{x, y, z};
  RatVector d(a.dim());
  for (const auto& p : sigma3::all_perms()) {
    if (v[p].is_zero()) continue;
    const auto s = sigma3::permute_slots(p, slots);
    axpy(d, v[p], associator(a, s[0], s[1], s[2]));
  }
  return d;
}

Verdict satisfies_v_relation(const Algebra& a, const GroupVector& v) {
  if (v.is_zero()) return Verdict::pass();
  const std::size_t n = a.dim();
  const auto table = associator_table(a);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        RatVector d(n);
        for (const auto& p : sigma3::all_perms()) {
          if (v[p].is_zero()) continue;
          const auto s = sigma3::permute_slots(p, std::array<std::size_t, 3>{x, y, z});
          axpy(d, v[p], table[(s[0] * n + s[1]) * n + s[2]]);
        }
        if (!is_zero(d)) return Verdict::fail({"associator relation", {x + 1, y + 1, z + 1}, {}, d});
      }
  return Verdict::pass();
}

Verdict is_gi_associative(const Algebra& a, int i) {
  return satisfies_v_relation(a, sigma3::alternating_vector(i));
}

Verdict is_lie_admissible(const Algebra& a) { return is_gi_associative(a, 6); }

Algebra commutator_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  Algebra out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out.constant(i, j, k) = a.constant(i, j, k) - a.constant(j, i, k);
  return out;
}

Verdict is_lie(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RatVector d = a.basis_product(i, j);
      axpy(d, 1, a.basis_product(j, i));
      if (!is_zero(d)) return Verdict::fail({"antisymmetry", {i + 1, j + 1}, {}, d});
    }
  auto bracket = [&](std::span<const Rat> x, std::span<const Rat> y) { return multiply(a, x, y); };
  auto unit = [&](std::size_t i) {
    RatVector e(n);
    e[i] = 1;
    return e;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const RatVector ex = unit(x), ey = unit(y), ez = unit(z);
        RatVector d = bracket(bracket(ex, ey), ez);
        axpy(d, 1, bracket(bracket(ey, ez), ex));
        axpy(d, 1, bracket(bracket(ez, ex), ey));
        if (!is_zero(d)) return Verdict::fail({"jacobi", {x + 1, y + 1, z + 1}, {}, d});
      }
  return Verdict::pass();
}

Verdict is_power3_associative(const Algebra& a) {
  return satisfies_v_relation(a, GroupVector::all_ones());
}

namespace {

// Vector-valued polynomial in t_1..t_n, keyed by the sorted multiset of
// variable indices of each monomial.
using Monomial = std::vector<std::size_t>;
using PolyVector = std::map<Monomial, RatVector>;

PolyVector poly_multiply(const Algebra& a, const PolyVector& p, const PolyVector& q) {
  PolyVector out;
  for (const auto& [mp, vp] : p)
    for (const auto& [mq, vq] : q) {
      Monomial m = mp;
      m.insert(m.end(), mq.begin(), mq.end());
      std::sort(m.begin(), m.end());
      auto [it, inserted] = out.try_emplace(m, RatVector(a.dim()));
      axpy(it->second, 1, multiply(a, vp, vq));
    }
  return out;
}

}  // namespace

Verdict power3_cube_check(const Algebra& a) {
  const std::size_t n = a.dim();
  PolyVector x;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n);
    e[i] = 1;
    x.emplace(Monomial{i}, std::move(e));
  }
  const PolyVector xx = poly_multiply(a, x, x);
  PolyVector cube = poly_multiply(a, xx, x);
  for (const auto& [m, v] : poly_multiply(a, x, xx)) {
    auto [it, inserted] = cube.try_emplace(m, RatVector(n));
    axpy(it->second, -1, v);
  }
  for (const auto& [m, v] : cube) {
    if (is_zero(v)) continue;
    std::vector<std::size_t> basis;
    for (std::size_t idx : m) basis.push_back(idx + 1);
    return Verdict::fail({"cube", std::move(basis), {}, v});
  }
  return Verdict::pass();
}

Verdict is_gi_shriek_algebra(const Algebra& a, int i) {
  if (i < 2 || i > 6)
    throw std::out_of_range("G_i^! index must be in 2..6, got " + std::to_string(i));
  const std::vector<Perm> group = sigma3::subgroup_elements(i);
  Verdict assoc = is_gi_associative(a, 1);
  if (!assoc) {
    assoc.witness->clause = "associativity";
    return assoc;
  }
  const std::size_t n = a.dim();
  // With associativity established, (e_x e_y) e_z is the triple product.
  std::vector<RatVector> triple(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const RatVector xy = a.basis_product(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        RatVector t(n);
        for (std::size_t m = 0; m < n; ++m) axpy(t, xy[m], a.basis_product(m, z));
        triple[(x * n + y) * n + z] = std::move(t);
      }
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::array<std::size_t, 3> idx{x, y, z};
        for (const auto& p : group) {
          if (p == Perm::identity()) continue;
          RatVector d = triple[(x * n + y) * n + z];
          axpy(d, -1, triple[(idx[p(0)] * n + idx[p(1)]) * n + idx[p(2)]]);
          if (!is_zero(d)) return Verdict::fail({"triple product", {x + 1, y + 1, z + 1}, p, d});
        }
      }
  return Verdict::pass();
}

std::vector<PredicateResult> predicate_report(const Algebra& a) {
  std::vector<PredicateResult> report;
  for (int i = 1; i <= 6; ++i) report.push_back({"G" + std::to_string(i), is_gi_associative(a, i)});
  report.push_back({"lie-admissible", is_lie_admissible(a)});
  report.push_back({"power3", is_power3_associative(a)});
  for (int i = 2; i <= 6; ++i)
    report.push_back({"G" + std::to_string(i) + "!", is_gi_shriek_algebra(a, i)});
  report.push_back({"commutator-lie", is_lie(commutator_algebra(a))});
  return report;
}

}  // namespace nacog
