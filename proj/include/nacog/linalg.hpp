#ifndef NACOG_LINALG_HPP
#define NACOG_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nacog/rational.hpp"

namespace nacog {

using RatVector = std::vector<Rat>;

/// Dense row-major matrix of rationals with fixed shape.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds a matrix whose rows are the given vectors; all must share one
  /// length, which becomes the column count (`cols` is used when `rows` is
  /// empty). Throws std::invalid_argument on ragged input.
  static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols = 0);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector apply(std::span<const Rat> x) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct EchelonForm {
  RatMatrix reduced;                 // nonzero rows only
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form. Pivots are taken as the first nonzero entry in
/// column order.
EchelonForm reduced_echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of { x : m x = 0 }, one vector per free column.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// True iff v lies in the span of `basis`. Throws std::invalid_argument when
/// the dimensions disagree.
bool in_span(std::span<const Rat> v, std::span<const RatVector> basis);

bool is_zero(std::span<const Rat> v);

}  // namespace nacog

#endif  // NACOG_LINALG_HPP
