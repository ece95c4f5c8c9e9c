#ifndef NACOG_TENSOR_HPP
#define NACOG_TENSOR_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "nacog/linalg.hpp"
#include "nacog/rational.hpp"

namespace nacog {

/// Element of M^{⊗k} for M of dimension n, stored as a dense coefficient
/// array in lexicographic index order.
template <std::size_t Order>
class Tensor {
public:
  using Index = std::array<std::size_t, Order>;

  Tensor() = default;
  explicit Tensor(std::size_t dim) : dim_(dim), data_(power(dim)) {}

  /// Decomposable basis tensor e_{idx[0]} ⊗ ... ⊗ e_{idx[Order-1]}.
  static Tensor basis(std::size_t dim, const Index& idx) {
    Tensor t(dim);
    t.at(idx) = 1;
    return t;
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }

  Rat& at(const Index& idx) { return data_[offset(idx)]; }
  const Rat& at(const Index& idx) const { return data_[offset(idx)]; }

  Rat& operator[](std::size_t flat) { return data_[flat]; }
  const Rat& operator[](std::size_t flat) const { return data_[flat]; }

  /// Inverse of the flat layout used by operator[].
  Index unflatten(std::size_t flat) const {
    Index idx{};
    for (std::size_t s = Order; s-- > 0;) {
      idx[s] = flat % dim_;
      flat /= dim_;
    }
    return idx;
  }

  const std::vector<Rat>& coefficients() const { return data_; }
  bool is_zero() const { return nacog::is_zero(data_); }

  Tensor& operator+=(const Tensor& rhs) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& rhs) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }
  Tensor& operator*=(const Rat& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rat& s, Tensor t) { return t *= s; }
  friend bool operator==(const Tensor&, const Tensor&) = default;

private:
  static std::size_t power(std::size_t n) {
    std::size_t p = 1;
    for (std::size_t i = 0; i < Order; ++i) p *= n;
    return p;
  }
  std::size_t offset(const Index& idx) const {
    std::size_t off = 0;
    for (std::size_t s = 0; s < Order; ++s) off = off * dim_ + idx[s];
    return off;
  }

  std::size_t dim_ = 0;
  std::vector<Rat> data_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

}  // namespace nacog

#endif  // NACOG_TENSOR_HPP
