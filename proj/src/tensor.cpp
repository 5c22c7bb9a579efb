#include "langnet/tensor.hpp"

#include <cmath>
#include <sstream>

#include "langnet/error.hpp"

namespace langnet::core {

std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << "x";
    os << s[i];
  }
  os << "]";
  return os.str();
}

long long shape_numel(const Shape& s) {
  long long n = 1;
  for (int e : s) n *= e;
  return n;
}

namespace {
void check_shape(const Shape& s) {
  for (int e : s) {
    if (e <= 0)
      throw DimensionError("tensor extents must be positive, got " +
                           shape_str(s));
  }
}
}  // namespace

Tensor::Tensor(Shape shape) : shape_(std::move(shape)) {
  check_shape(shape_);
  values_.assign(static_cast<size_t>(shape_numel(shape_)), 0.0);
}

Tensor::Tensor(Shape shape, std::vector<double> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
  check_shape(shape_);
  if (shape_numel(shape_) != static_cast<long long>(values_.size()))
    throw DimensionError("tensor value count " +
                         std::to_string(values_.size()) +
                         " does not match shape " + shape_str(shape_));
}

Tensor Tensor::full(Shape shape, double v) {
  Tensor t(std::move(shape));
  t.fill(v);
  return t;
}

Tensor Tensor::uniform(Shape shape, Rng& rng, double lo, double hi) {
  Tensor t(std::move(shape));
  for (long long i = 0; i < t.numel(); ++i) t[i] = rng.uniform(lo, hi);
  return t;
}

double& Tensor::at(int i) {
  if (rank() != 1) throw DimensionError("at(i) on tensor " + shape_str(shape_));
  return values_[static_cast<size_t>(i)];
}

double& Tensor::at(int i, int j) {
  if (rank() != 2)
    throw DimensionError("at(i,j) on tensor " + shape_str(shape_));
  return values_[static_cast<size_t>(i) * shape_[1] + j];
}

double& Tensor::at(int i, int j, int k) {
  if (rank() != 3)
    throw DimensionError("at(i,j,k) on tensor " + shape_str(shape_));
  return values_[(static_cast<size_t>(i) * shape_[1] + j) * shape_[2] + k];
}

double& Tensor::at(int i, int j, int k, int l) {
  if (rank() != 4)
    throw DimensionError("at(i,j,k,l) on tensor " + shape_str(shape_));
  return values_[((static_cast<size_t>(i) * shape_[1] + j) * shape_[2] + k) *
                     shape_[3] +
                 l];
}

void Tensor::fill(double v) {
  for (auto& x : values_) x = v;
}

void Tensor::add_(const Tensor& other) {
  if (!same_shape(other))
    throw DimensionError("add_: shape mismatch " + shape_str(shape_) + " vs " +
                         shape_str(other.shape_));
  const double* src = other.data();
  for (size_t i = 0; i < values_.size(); ++i) values_[i] += src[i];
}

void Tensor::scale_(double s) {
  for (auto& x : values_) x *= s;
}

bool Tensor::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

void Tensor::require_finite(const char* what) const {
  if (!all_finite())
    throw RangeError(std::string(what) + ": non-finite value in tensor " +
                     shape_str(shape_));
}

}  // namespace langnet::core
