#include "nacog/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nacog {

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("RatMatrix::from_rows: row " + std::to_string(r) + " has length " +
                                  std::to_string(rows[r].size()) + ", expected " +
                                  std::to_string(cols));
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  const auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return RatVector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

RatVector RatMatrix::apply(std::span<const Rat> x) const {
  if (x.size() != cols_) throw std::invalid_argument("RatMatrix::apply: dimension mismatch");
  RatVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
  return y;
}

EchelonForm reduced_echelon(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(lead, c));
    const Rat inv = Rat(1) / a(lead, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, col).is_zero()) continue;
      const Rat factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(lead, c).is_zero()) a(r, c) -= factor * a(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  RatMatrix reduced(pivots.size(), a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) reduced(r, c) = a(r, c);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return reduced_echelon(m).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const EchelonForm ef = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ef.pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector k(m.cols());
    k[free] = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) k[ef.pivots[r]] = -ef.reduced(r, free);
    basis.push_back(std::move(k));
  }
  return basis;
}

bool in_span(std::span<const Rat> v, std::span<const RatVector> basis) {
  for (const auto& b : basis)
    if (b.size() != v.size()) throw std::invalid_argument("in_span: dimension mismatch");
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  std::vector<RatVector> rows(basis.begin(), basis.end());
  const std::size_t before = rank(RatMatrix::from_rows(rows));
  rows.emplace_back(v.begin(), v.end());
  return rank(RatMatrix::from_rows(rows)) == before;
}

bool is_zero(std::span<const Rat> v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

}  // namespace nacog
