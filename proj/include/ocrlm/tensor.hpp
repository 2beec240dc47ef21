#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ocrlm::net {

/// Dense row-major tensor of doubles.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> s, double fill = 0.0)
      : shape(std::move(s)), data(count(shape), fill) {}

  static std::size_t count(const std::vector<std::size_t>& s) {
    return std::accumulate(s.begin(), s.end(), std::size_t{1}, std::multiplies<>());
  }
  std::size_t size() const { return data.size(); }
  std::size_t rows() const { return shape.empty() ? 0 : shape.front(); }
  std::size_t cols() const { return shape.size() < 2 ? 1 : shape[1]; }
  double* ptr() { return data.data(); }
  const double* ptr() const { return data.data(); }
  double& operator()(std::size_t r, std::size_t c) { return data[r * cols() + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols() + c]; }

  bool operator==(const Tensor&) const = default;
};

/// An ordered, named collection of tensors: model parameters, their
/// gradients and optimizer moments all share one layout.
class ParamSet {
 public:
  std::size_t add(std::string name, std::vector<std::size_t> shape);
  std::size_t size() const { return tensors_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  Tensor& operator[](std::size_t i) { return tensors_[i]; }
  const Tensor& operator[](std::size_t i) const { return tensors_[i]; }
  /// Index by name; throws std::out_of_range when absent.
  std::size_t index(std::string_view name) const;

  /// Same names and shapes, all zeros.
  ParamSet zeros_like() const;
  void set_zero();
  std::size_t total_size() const;
  /// this += other (layouts must match)
  void accumulate(const ParamSet& other);
  void scale(double factor);
  double squared_norm() const;

  bool operator==(const ParamSet&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Tensor> tensors_;
};

}  // namespace ocrlm::net
