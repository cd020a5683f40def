#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "reco/core/error.hpp"

namespace reco {

// Dense row-major tensor. Images use NCHW, matrices (rows, cols).
template <typename T = float>
class Tensor {
public:
  Tensor() = default;

  explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    data_.assign(numel_of(shape_), T(0));
  }

  Tensor(std::initializer_list<int> shape) : Tensor(std::vector<int>(shape)) {}

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }

  static Tensor full(std::vector<int> shape, T value) {
    Tensor t(std::move(shape));
    std::fill(t.data_.begin(), t.data_.end(), value);
    return t;
  }

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  T& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  const T& operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  void fill(T v) { std::fill(data_.begin(), data_.end(), v); }

  // Reinterprets the buffer with a new shape of identical element count.
  void reshape(std::vector<int> shape) {
    require(numel_of(shape) == numel(), ErrorKind::param,
            "reshape: element count mismatch");
    shape_ = std::move(shape);
  }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  bool all_finite() const {
    for (const T& v : data_) {
      if (!std::isfinite(static_cast<double>(v))) return false;
    }
    return true;
  }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out(shape_);
    for (int64_t i = 0; i < numel(); ++i) out[i] = static_cast<U>(data_[static_cast<size_t>(i)]);
    return out;
  }

  static int64_t numel_of(const std::vector<int>& shape) {
    int64_t n = 1;
    for (int d : shape) {
      require(d >= 0, ErrorKind::param, "tensor dimensions must be non-negative");
      n *= d;
    }
    return n;
  }

private:
  std::vector<int> shape_;
  std::vector<T> data_;
};

// Borrowed 2-D view used by loss and evaluation routines.
template <typename T>
struct MatView {
  const T* data = nullptr;
  int rows = 0;
  int cols = 0;

  MatView() = default;
  MatView(const T* d, int r, int c) : data(d), rows(r), cols(c) {}
  explicit MatView(const Tensor<T>& t)
      : data(t.data()), rows(t.rank() == 2 ? t.dim(0) : 0), cols(t.rank() == 2 ? t.dim(1) : 0) {
    require(t.rank() == 2, ErrorKind::param, "MatView requires a rank-2 tensor");
  }

  const T* row(int i) const { return data + static_cast<int64_t>(i) * cols; }
};

}  // namespace reco
