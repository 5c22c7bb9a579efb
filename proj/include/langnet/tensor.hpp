#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "langnet/rng.hpp"

namespace langnet::core {

using Shape = std::vector<int>;

std::string shape_str(const Shape& s);
long long shape_numel(const Shape& s);

/// Dense row-major tensor of doubles. Values are immutable by convention
/// once an op has produced them; only the optimizer rewrites parameters.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape);
  Tensor(Shape shape, std::vector<double> values);

  static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
  static Tensor full(Shape shape, double v);
  static Tensor scalar(double v) { return Tensor({1}, {v}); }
  static Tensor uniform(Shape shape, Rng& rng, double lo, double hi);

  const Shape& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int extent(int axis) const { return shape_[static_cast<size_t>(axis)]; }
  long long numel() const { return static_cast<long long>(values_.size()); }
  bool empty() const { return values_.empty(); }

  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }

  double& operator[](long long i) { return values_[static_cast<size_t>(i)]; }
  double operator[](long long i) const { return values_[static_cast<size_t>(i)]; }

  double& at(int i);
  double& at(int i, int j);
  double& at(int i, int j, int k);
  double& at(int i, int j, int k, int l);
  double at(int i) const { return const_cast<Tensor*>(this)->at(i); }
  double at(int i, int j) const { return const_cast<Tensor*>(this)->at(i, j); }
  double at(int i, int j, int k) const {
    return const_cast<Tensor*>(this)->at(i, j, k);
  }
  double at(int i, int j, int k, int l) const {
    return const_cast<Tensor*>(this)->at(i, j, k, l);
  }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  void fill(double v);
  /// this += other, shapes must match.
  void add_(const Tensor& other);
  /// this *= s.
  void scale_(double s);

  bool all_finite() const;
  /// Throws RangeError naming `what` if any value is NaN or infinite.
  void require_finite(const char* what) const;

 private:
  Shape shape_;
  std::vector<double> values_;
};

}  // namespace langnet::core
