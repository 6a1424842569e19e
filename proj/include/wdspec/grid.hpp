#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace wdspec {

/// Uniform discretization of the circle [0, L) with n nodes x_j = j L / n.
class PeriodicGrid {
public:
  PeriodicGrid(std::size_t n, double length = 1.0) : n_(n), length_(length) {
    if (n_ < 16 || n_ % 2 != 0)
      throw GridError("grid size n must be even and >= 16, got " + std::to_string(n_));
    if (!(length_ > 0.0) || !std::isfinite(length_))
      throw GridError("grid length L must be positive and finite");
  }

  std::size_t size() const noexcept { return n_; }
  double length() const noexcept { return length_; }
  double dx() const noexcept { return length_ / static_cast<double>(n_); }
  double node(std::size_t j) const noexcept {
    return static_cast<double>(j) * length_ / static_cast<double>(n_);
  }
  /// Physical wavenumber 2 pi k / L of integer mode k.
  double wavenumber(std::size_t k) const noexcept {
    return 2.0 * std::numbers::pi * static_cast<double>(k) / length_;
  }

  friend bool operator==(const PeriodicGrid&, const PeriodicGrid&) = default;

private:
  std::size_t n_;
  double length_;
};

/// Real field sampled at the nodes of a PeriodicGrid.
class Field {
public:
  explicit Field(PeriodicGrid grid) : grid_(grid), values_(grid.size(), 0.0) {}

  Field(PeriodicGrid grid, std::vector<double> values)
      : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size())
      throw GridError("field length " + std::to_string(values_.size()) +
                      " does not match grid size " + std::to_string(grid_.size()));
  }

  static Field constant(PeriodicGrid grid, double c) {
    return Field(grid, std::vector<double>(grid.size(), c));
  }

  template <class F>
  static Field sample(PeriodicGrid grid, F&& f) {
    Field out(grid);
    for (std::size_t j = 0; j < grid.size(); ++j)
      out.values_[j] = std::invoke(f, grid.node(j));
    return out;
  }

  const PeriodicGrid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  double& operator[](std::size_t j) { return values_[j]; }
  double operator[](std::size_t j) const { return values_[j]; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<double>& data() const noexcept { return values_; }

  bool all_finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(),
                       [](double v) { return std::isfinite(v); });
  }

  /// Max norm; NaN entries propagate as +inf so blow-up checks see them.
  double max_abs() const noexcept {
    double m = 0.0;
    for (double v : values_) {
      if (!std::isfinite(v)) return INFINITY;
      m = std::max(m, std::abs(v));
    }
    return m;
  }

  /// Discrete L2 norm sqrt(sum f_j^2 dx).
  double l2_norm() const noexcept {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s * grid_.dx());
  }

  Field& operator+=(const Field& o) {
    check_same(o);
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += o.values_[j];
    return *this;
  }
  Field& operator-=(const Field& o) {
    check_same(o);
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= o.values_[j];
    return *this;
  }
  Field& operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
  }

  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(Field a, double s) { return a *= s; }
  friend Field operator*(double s, Field a) { return a *= s; }
  friend Field operator-(Field a) { return a *= -1.0; }

  /// Pointwise product.
  friend Field hadamard(const Field& a, const Field& b) {
    a.check_same(b);
    Field out(a.grid_);
    for (std::size_t j = 0; j < a.size(); ++j) out.values_[j] = a.values_[j] * b.values_[j];
    return out;
  }

  friend bool operator==(const Field&, const Field&) = default;

private:
  void check_same(const Field& o) const {
    if (!(o.grid_ == grid_)) throw GridError("fields live on different grids");
  }

  PeriodicGrid grid_;
  std::vector<double> values_;
};

/// Max-norm distance between two fields on the same grid.
inline double max_diff(const Field& a, const Field& b) { return (a - b).max_abs(); }

} // namespace wdspec
