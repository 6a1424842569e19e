#pragma once

// Initial data as truncated trigonometric series, plus the named presets
// used by the experiments and the command-line tool.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"

namespace wdspec {

/// f(x) = sum_k cos_coeffs[k] cos(2 pi k x / L) + sum_k sin_coeffs[k-1] sin(2 pi k x / L).
/// cos_coeffs[0] is the constant term; sin_coeffs starts at mode 1.
struct TrigSeries {
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;

  Field evaluate(const PeriodicGrid& grid) const {
    const double w = 2.0 * std::numbers::pi / grid.length();
    return Field::sample(grid, [&](double x) {
      double s = 0.0;
      for (std::size_t k = 0; k < cos_coeffs.size(); ++k) s += cos_coeffs[k] * std::cos(w * k * x);
      for (std::size_t k = 0; k < sin_coeffs.size(); ++k) s += sin_coeffs[k] * std::sin(w * (k + 1) * x);
      return s;
    });
  }

  /// Term-by-term derivative on a domain of length L.
  TrigSeries derivative(double L) const {
    const double w = 2.0 * std::numbers::pi / L;
    TrigSeries d;
    const std::size_t modes = std::max(cos_coeffs.size(), sin_coeffs.size() + 1);
    d.cos_coeffs.assign(modes, 0.0);
    d.sin_coeffs.assign(modes > 0 ? modes - 1 : 0, 0.0);
    for (std::size_t k = 1; k < cos_coeffs.size(); ++k) d.sin_coeffs[k - 1] = -w * k * cos_coeffs[k];
    for (std::size_t k = 0; k < sin_coeffs.size(); ++k) d.cos_coeffs[k + 1] = w * (k + 1) * sin_coeffs[k];
    return d;
  }

  /// Mean of f^2 over one period.
  double mean_square() const {
    double s = cos_coeffs.empty() ? 0.0 : cos_coeffs[0] * cos_coeffs[0];
    for (std::size_t k = 1; k < cos_coeffs.size(); ++k) s += 0.5 * cos_coeffs[k] * cos_coeffs[k];
    for (double b : sin_coeffs) s += 0.5 * b * b;
    return s;
  }

  std::size_t highest_mode() const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < cos_coeffs.size(); ++i) if (cos_coeffs[i] != 0.0) k = std::max(k, i);
    for (std::size_t i = 0; i < sin_coeffs.size(); ++i) if (sin_coeffs[i] != 0.0) k = std::max(k, i + 1);
    return k;
  }

  TrigSeries scaled(double s) const {
    TrigSeries out = *this;
    for (double& c : out.cos_coeffs) c *= s;
    for (double& c : out.sin_coeffs) c *= s;
    return out;
  }

  friend bool operator==(const TrigSeries&, const TrigSeries&) = default;
};

struct InitialData {
  TrigSeries v;
  TrigSeries sigma;

  Field v_field(const PeriodicGrid& g) const { return v.evaluate(g); }
  Field sigma_field(const PeriodicGrid& g) const { return sigma.evaluate(g); }
};

namespace presets {

/// v = 1.
inline InitialData constant(double c = 1.0) { return {{{c}, {}}, {}}; }

/// v = sin(2 pi x / L) + 0.5 cos(4 pi x / L), sigma = 0.
inline InitialData smooth() { return {{{0.0, 0.0, 0.5}, {1.0}}, {}}; }

/// smooth() with sigma = 0.3 cos(2 pi x / L).
inline InitialData smooth_two_component() {
  InitialData d = smooth();
  d.sigma = {{0.0, 0.3}, {}};
  return d;
}

/// smooth() scaled by 0.1; stays smooth over unit times.
inline InitialData smooth_small() {
  InitialData d = smooth();
  d.v = d.v.scaled(0.1);
  return d;
}

/// smooth_small() with sigma = 0.03 cos(2 pi x / L).
inline InitialData smooth_small_two_component() {
  InitialData d = smooth_small();
  d.sigma = {{0.0, 0.03}, {}};
  return d;
}

/// v0_x = s (cos 2 pi x + 0.4 sin 4 pi x), rho0 = s (1 + 0.3 sin 2 pi x),
/// s chosen so that (1/4) mean(v0_x^2 + rho0^2) = 1. Unit circle, kappa = +1.
inline InitialData hs_generic() {
  const double pi = std::numbers::pi;
  const TrigSeries vx{{0.0, 1.0}, {0.0, 0.4}};
  const TrigSeries rho{{1.0}, {0.3}};
  const double s = 1.0 / std::sqrt(0.25 * (vx.mean_square() + rho.mean_square()));
  // v0 = antiderivative of v0_x with zero mean.
  const TrigSeries v{{0.0, 0.0, -0.4 / (4.0 * pi)}, {1.0 / (2.0 * pi)}};
  return {v.scaled(s), rho.scaled(s)};
}

/// v0 = 0, rho0 = 2: the flow map is the identity and sigma decays as 2 exp(-lambda t).
inline InitialData hs_stationary() { return {{}, {{2.0}, {}}}; }

/// v0 = sin(2 pi x) / pi (slope 2 cos 2 pi x), sigma0 = 0.5. Breaks in finite
/// time for kappa = -1.
inline InitialData hs_steep() {
  return {{{}, {1.0 / std::numbers::pi}}, {{0.5}, {}}};
}

/// Seeded random series on modes 1..4 with coefficients in [-0.1, 0.1].
inline InitialData random(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto uniform = [&]() {
    // 53 random bits mapped to [-1, 1); independent of the standard library's distributions.
    return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
  };
  InitialData d;
  d.v.cos_coeffs.assign(5, 0.0);
  d.v.sin_coeffs.assign(4, 0.0);
  for (std::size_t k = 1; k <= 4; ++k) {
    d.v.cos_coeffs[k] = 0.1 * uniform();
    d.v.sin_coeffs[k - 1] = 0.1 * uniform();
  }
  return d;
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{
      "constant", "smooth", "smooth_two_component", "smooth_small", "smooth_small_two_component",
      "hs_generic", "hs_stationary", "hs_steep", "random", "series"};
  return n;
}

/// Looks up a named preset. "series" is not handled here since it needs
/// explicit coefficients.
inline InitialData by_name(const std::string& name, std::uint64_t seed = 0) {
  if (name == "constant") return constant();
  if (name == "smooth") return smooth();
  if (name == "smooth_two_component") return smooth_two_component();
  if (name == "smooth_small") return smooth_small();
  if (name == "smooth_small_two_component") return smooth_small_two_component();
  if (name == "hs_generic") return hs_generic();
  if (name == "hs_stationary") return hs_stationary();
  if (name == "hs_steep") return hs_steep();
  if (name == "random") return random(seed);
  throw InvalidData("unknown initial-data preset '" + name + "'");
}

} // namespace presets
} // namespace wdspec
