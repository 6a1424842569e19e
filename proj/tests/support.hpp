#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include <wdspec/grid.hpp>

namespace wdspec::testing {

/// Random trigonometric polynomial with modes 0..kmax and coefficients in
/// [-1, 1] scaled by amp / (1 + k^decay).
inline Field random_band_limited(const PeriodicGrid& g, std::size_t kmax, std::uint64_t seed,
                                 double amp = 1.0, double decay = 0.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> a(kmax + 1), b(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) {
    const double s = amp / (1.0 + std::pow(static_cast<double>(k), decay));
    a[k] = s * u(rng);
    b[k] = k == 0 ? 0.0 : s * u(rng);
  }
  const double w = 2.0 * std::numbers::pi / g.length();
  return Field::sample(g, [&](double x) {
    double s = 0.0;
    for (std::size_t k = 0; k <= kmax; ++k) s += a[k] * std::cos(w * k * x) + b[k] * std::sin(w * k * x);
    return s;
  });
}

/// Independent white-noise samples in [-1, 1].
inline Field random_samples(const PeriodicGrid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Field f(g);
  for (std::size_t j = 0; j < g.size(); ++j) f[j] = u(rng);
  return f;
}

inline Field remove_mean(Field f) {
  double s = 0.0;
  for (double v : f.values()) s += v;
  s /= static_cast<double>(f.size());
  for (double& v : f.values()) v -= s;
  return f;
}

} // namespace wdspec::testing
