#pragma once

// Fourier-space operators on periodic fields: differentiation, the elliptic
// inversions that recover velocity from momentum, and the 2/3-rule filter.

#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include "fft.hpp"
#include "grid.hpp"

namespace wdspec {

namespace detail {

template <class Multiplier>
Field apply_multiplier(const Field& f, Multiplier&& mult) {
  const auto& grid = f.grid();
  Spectrum s = forward_fft(f);
  for (std::size_t k = 0; k < s.size(); ++k) s[k] *= mult(k, grid.wavenumber(k));
  return inverse_fft(std::move(s), grid);
}

} // namespace detail

/// Derivative of the trigonometric interpolant. Supports order 1, 2 and 3.
/// The Nyquist mode is dropped for odd orders so the result stays real.
inline Field spectral_derivative(const Field& f, int order) {
  if (order < 1 || order > 3)
    throw UnsupportedOrder("spectral_derivative supports orders 1..3, got " + std::to_string(order));
  const std::size_t nyquist = f.size() / 2;
  return detail::apply_multiplier(f, [&](std::size_t k, double kp) -> std::complex<double> {
    if (order % 2 == 1 && k == nyquist) return 0.0;
    const std::complex<double> ik(0.0, kp);
    std::complex<double> m = ik;
    for (int o = 1; o < order; ++o) m *= ik;
    return m;
  });
}

/// Spatial average (1/L) * sum f_j dx.
inline double mean(const Field& f) {
  const auto v = f.values();
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

/// Solves v - v_xx = m.
inline Field helmholtz_inverse(const Field& m) {
  return detail::apply_multiplier(m, [](std::size_t, double kp) -> std::complex<double> {
    return 1.0 / (1.0 + kp * kp);
  });
}

/// Forward operator m = v - v_xx.
inline Field helmholtz_apply(const Field& v) {
  return detail::apply_multiplier(v, [](std::size_t, double kp) -> std::complex<double> {
    return 1.0 + kp * kp;
  });
}

/// Solves mean(v) - v_xx = m. The zero mode passes through unchanged since
/// mean(m) = mean(v).
inline Field mu_helmholtz_inverse(const Field& m) {
  return detail::apply_multiplier(m, [](std::size_t k, double kp) -> std::complex<double> {
    return k == 0 ? 1.0 : 1.0 / (kp * kp);
  });
}

/// Forward operator m = mean(v) - v_xx.
inline Field mu_helmholtz_apply(const Field& v) {
  return detail::apply_multiplier(v, [](std::size_t k, double kp) -> std::complex<double> {
    return k == 0 ? 1.0 : kp * kp;
  });
}

/// Tolerance on |mean(m)| for the -v_xx inversion to be well posed.
inline constexpr double kMeanCompatibilityTol = 1e-10;

/// Solves -v_xx = m with mean(v) fixed to gauge_mean. Requires mean(m) = 0.
/// Non-finite input is passed through so that callers can detect it.
inline Field neg_laplacian_inverse(const Field& m, double gauge_mean = 0.0) {
  const double mu = mean(m);
  if (std::isfinite(mu) && std::abs(mu) > kMeanCompatibilityTol)
    throw IncompatibleMean("momentum for m = -v_xx must have zero mean, got mean " +
                           std::to_string(mu));
  Field v = detail::apply_multiplier(m, [](std::size_t k, double kp) -> std::complex<double> {
    return k == 0 ? 0.0 : 1.0 / (kp * kp);
  });
  for (double& x : v.values()) x += gauge_mean;
  return v;
}

/// Forward operator m = -v_xx.
inline Field neg_laplacian_apply(const Field& v) {
  return detail::apply_multiplier(v, [](std::size_t, double kp) -> std::complex<double> {
    return kp * kp;
  });
}

/// Largest retained mode under the two-thirds rule.
inline std::size_t dealias_cutoff(std::size_t n) { return n / 3; }

/// Zeroes every mode with |k| > n/3. Idempotent.
inline Field dealias(const Field& f) {
  const std::size_t cut = dealias_cutoff(f.size());
  return detail::apply_multiplier(f, [&](std::size_t k, double) -> std::complex<double> {
    return k <= cut ? 1.0 : 0.0;
  });
}

/// Antiderivative F(x) = int_0^x f, split into mean(f) x plus the spectrally
/// integrated periodic remainder. F(x_0) = 0.
inline Field antiderivative(const Field& f) {
  const auto& grid = f.grid();
  const double mu = mean(f);
  const std::size_t nyquist = f.size() / 2;
  Field periodic = detail::apply_multiplier(f, [&](std::size_t k, double kp) -> std::complex<double> {
    if (k == 0 || k == nyquist) return 0.0;
    return 1.0 / std::complex<double>(0.0, kp);
  });
  const double offset = periodic[0];
  for (std::size_t j = 0; j < f.size(); ++j) periodic[j] += mu * grid.node(j) - offset;
  return periodic;
}

/// Band-limited resampling onto a grid of the same length with n_new nodes.
/// Modes above the coarser Nyquist frequency are discarded; the Nyquist mode
/// of the source is split symmetrically when refining.
inline Field resample(const Field& f, std::size_t n_new) {
  const PeriodicGrid target(n_new, f.grid().length());
  const std::size_t n_old = f.size();
  if (n_new == n_old) return f;
  Spectrum s = forward_fft(f);
  Spectrum out(n_new / 2 + 1, {0.0, 0.0});
  const double scale = static_cast<double>(n_new) / static_cast<double>(n_old);
  if (n_new > n_old) {
    for (std::size_t k = 0; k <= n_old / 2; ++k) out[k] = s[k] * scale;
    out[n_old / 2] *= 0.5;
  } else {
    for (std::size_t k = 0; k < n_new / 2; ++k) out[k] = s[k] * scale;
  }
  return inverse_fft(std::move(out), target);
}

} // namespace wdspec
