#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace melpress {

// Dense row-major tensor of 64-bit floats. Mostly used as 1-D (row vector)
// or 2-D (rows x cols); shape is kept general for serialization.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int64_t> shape);
  Tensor(std::initializer_list<int64_t> shape);

  static Tensor from(std::vector<int64_t> shape, std::vector<double> values);
  static Tensor full(std::vector<int64_t> shape, double v);

  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t ndim() const { return static_cast<int64_t>(shape_.size()); }
  int64_t size() const { return static_cast<int64_t>(data_.size()); }

  // 2-D view: a 1-D tensor is treated as a single row.
  int64_t rows() const;
  int64_t cols() const;

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& at(int64_t i) { return data_[static_cast<size_t>(i)]; }
  double at(int64_t i) const { return data_[static_cast<size_t>(i)]; }
  double& at(int64_t r, int64_t c) { return data_[static_cast<size_t>(r * cols() + c)]; }
  double at(int64_t r, int64_t c) const { return data_[static_cast<size_t>(r * cols() + c)]; }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }
  bool all_finite() const;
  void fill(double v);

  bool operator==(const Tensor& o) const { return shape_ == o.shape_ && data_ == o.data_; }

 private:
  std::vector<int64_t> shape_;
  std::vector<double> data_;
};

}  // namespace melpress
