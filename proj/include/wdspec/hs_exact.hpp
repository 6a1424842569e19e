#pragma once

// Closed-form solution of the periodic weakly dissipative Hunter-Saxton
// system on the unit circle, normalized so that
//
//   c(0) = (1/4) int (v0_x^2 + kappa rho0^2) dx = 1.
//
// With tau = (1 - exp(-lambda t)) / lambda the Lagrangian flow map is
//
//   phi(t, x) = int_0^x (cos tau + v0_x/2 sin tau)^2 + kappa rho0^2/4 sin^2 tau
//
// and v_x, rho along the flow are explicit rational functions of
// (cos tau, sin tau, v0_x, rho0) times exp(-lambda t).

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

// Boost 1.74's pchip.hpp calls isnan unqualified.
namespace boost::math::interpolators {
using std::isnan;
}
#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include "grid.hpp"
#include "spectral.hpp"
#include "transform.hpp"

namespace wdspec {

/// (1/4) mean(v0x^2 + kappa rho0^2) on the unit circle.
inline double hs_energy_constant(const Field& v0x, const Field& rho0, int kappa) {
  double s = 0.0;
  for (std::size_t j = 0; j < v0x.size(); ++j)
    s += v0x[j] * v0x[j] + kappa * rho0[j] * rho0[j];
  return 0.25 * s / static_cast<double>(v0x.size());
}

/// Initial data for the closed-form solution. rho0 is the initial second
/// component sigma0.
class HSExactData {
public:
  HSExactData(Field v0x, Field rho0, int kappa, double lambda)
      : v0x_(std::move(v0x)), rho0_(std::move(rho0)), kappa_(kappa), lambda_(lambda) {
    if (!(v0x_.grid() == rho0_.grid())) throw InvalidData("v0x and rho0 must share a grid");
    if (v0x_.grid().length() != 1.0) throw InvalidData("closed-form solution lives on the unit circle (L = 1)");
    if (kappa_ != 1 && kappa_ != -1) throw InvalidData("kappa must be +1 or -1");
    if (!(lambda_ >= 0.0) || !std::isfinite(lambda_)) throw InvalidData("lambda must be >= 0");
    if (!(std::abs(mean(v0x_)) <= 1e-12))
      throw InvalidData("v0x must have zero mean (v0 periodic), got " + std::to_string(mean(v0x_)));
    const double c0 = hs_energy_constant(v0x_, rho0_, kappa_);
    if (!(std::abs(c0 - 1.0) <= 1e-10))
      throw InvalidData("normalization c(0) = 1 violated, c(0) = " + std::to_string(c0));
  }

  const Field& v0x() const { return v0x_; }
  const Field& rho0() const { return rho0_; }
  int kappa() const { return kappa_; }
  double lambda() const { return lambda_; }
  const PeriodicGrid& grid() const { return v0x_.grid(); }
  double c0() const { return hs_energy_constant(v0x_, rho0_, kappa_); }

  HSExactData with_lambda(double l) const { return {v0x_, rho0_, kappa_, l}; }

  /// tau_lambda(t).
  double tau_of(double t) const { return tau(t, TimeMapParams(lambda_, 1)); }
  /// d tau / dt = exp(-lambda t).
  double tau_rate(double t) const { return std::exp(-lambda_ * t); }

private:
  Field v0x_;
  Field rho0_;
  int kappa_;
  double lambda_;
};

namespace detail {

// phi_x as a function of the label, at rescaled time tau.
inline Field hs_integrand(const HSExactData& d, double tau) {
  const double c = std::cos(tau), s = std::sin(tau);
  Field out(d.grid());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double a = c + 0.5 * d.v0x()[j] * s;
    out[j] = a * a + d.kappa() * 0.25 * d.rho0()[j] * d.rho0()[j] * s * s;
  }
  return out;
}

// d/dtau of hs_integrand.
inline Field hs_integrand_dtau(const HSExactData& d, double tau) {
  const double c = std::cos(tau), s = std::sin(tau);
  Field out(d.grid());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double w = d.v0x()[j];
    const double r = d.rho0()[j];
    out[j] = 2.0 * (c + 0.5 * w * s) * (-s + 0.5 * w * c) + d.kappa() * 0.5 * r * r * s * c;
  }
  return out;
}

} // namespace detail

/// phi(t, x_j) at the label nodes. phi(t, 0) = 0.
inline Field flow_map(const HSExactData& d, double t) {
  return antiderivative(detail::hs_integrand(d, d.tau_of(t)));
}

/// phi(t, x + 1) - phi(t, x); equals 1 under the normalization.
inline double winding(const HSExactData& d, double t) {
  return d.grid().length() * mean(detail::hs_integrand(d, d.tau_of(t)));
}

/// Minimum over labels below which the explicit formulas are not trusted.
inline constexpr double kBreakdownThreshold = 1e-8;

struct AlongFlow {
  Field vx;   ///< v_x(t, phi(t, x))
  Field rho;  ///< rho(t, phi(t, x))
};

/// Explicit v_x and rho at the particle positions, as functions of the label.
inline AlongFlow exact_along_flow(const HSExactData& d, double t) {
  const double tau = d.tau_of(t);
  const double c = std::cos(tau), s = std::sin(tau);
  const double c2 = std::cos(2.0 * tau), s2 = std::sin(2.0 * tau);
  const double pre = d.lambda() == 0.0 ? 1.0 : std::exp(-d.lambda() * t);
  AlongFlow out{Field(d.grid()), Field(d.grid())};
  double min_den = INFINITY;
  for (std::size_t j = 0; j < d.grid().size(); ++j) {
    const double w = d.v0x()[j];
    const double r = d.rho0()[j];
    const double a = 2.0 * c + w * s;
    const double den = a * a + d.kappa() * r * r * s * s;
    min_den = std::min(min_den, den);
    out.vx[j] = pre * (4.0 * c2 * w + s2 * (w * w + d.kappa() * r * r - 4.0)) / den;
    out.rho[j] = pre * 4.0 * r / den;
  }
  if (!(min_den > kBreakdownThreshold))
    throw Breakdown("closed-form denominator reached " + std::to_string(min_den) + " at t = " +
                    std::to_string(t));
  return out;
}

/// c(t) = exp(-2 lambda t) c(0).
inline double c_of_t(const HSExactData& d, double t) {
  return std::exp(-2.0 * d.lambda() * t) * d.c0();
}

/// (1/4) int [(v_x o phi)^2 + kappa (rho o phi)^2] phi_x dx, i.e. c(t)
/// computed from the explicit fields by a change of variables.
inline double eulerian_energy_quadrature(const HSExactData& d, double t) {
  const AlongFlow f = exact_along_flow(d, t);
  const Field phi_x = detail::hs_integrand(d, d.tau_of(t));
  double s = 0.0;
  for (std::size_t j = 0; j < phi_x.size(); ++j)
    s += (f.vx[j] * f.vx[j] + d.kappa() * f.rho[j] * f.rho[j]) * phi_x[j];
  return 0.25 * s / static_cast<double>(phi_x.size());
}

/// phi_t(t, x_j), the particle velocity in the closed form's own gauge.
inline Field flow_velocity(const HSExactData& d, double t) {
  Field g = antiderivative(detail::hs_integrand_dtau(d, d.tau_of(t)));
  return g * d.tau_rate(t);
}

/// Eulerian mean of the closed form's velocity, int phi_t phi_x dx.
inline double oracle_mean_velocity(const HSExactData& d, double t) {
  const Field phi_t = flow_velocity(d, t);
  const Field phi_x = detail::hs_integrand(d, d.tau_of(t));
  double s = 0.0;
  for (std::size_t j = 0; j < phi_t.size(); ++j) s += phi_t[j] * phi_x[j];
  return s / static_cast<double>(phi_t.size());
}

/// A(t) = int_0^t oracle_mean_velocity(s) ds. A solver that pins mean(v) = 0
/// sees the closed-form fields translated by -A(t).
inline double gauge_shift(const HSExactData& d, double t) {
  if (t == 0.0) return 0.0;
  const auto f = [&](double s) { return oracle_mean_velocity(d, s); };
  const int panels = std::max(1, static_cast<int>(std::ceil(t / 0.25)));
  const double h = t / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i)
    total += boost::math::quadrature::gauss<double, 20>::integrate(f, i * h, (i + 1) * h);
  return total;
}

/// Interpolates Lagrangian samples (phi_j, f_j) onto the nodes of grid with a
/// monotone piecewise-cubic (PCHIP) interpolant of the periodic extension.
inline Field eulerian_reconstruct(const Field& phi, const Field& f_at_phi, const PeriodicGrid& grid) {
  const std::size_t m = phi.size();
  if (f_at_phi.size() != m) throw GridError("phi and f must have the same length");
  const double L = grid.length();
  for (std::size_t j = 0; j + 1 < m; ++j)
    if (!(phi[j + 1] - phi[j] > 0.0))
      throw NonMonotoneFlow("flow map not increasing between labels " + std::to_string(j) +
                            " and " + std::to_string(j + 1));
  if (!(phi[0] + L - phi[m - 1] > 0.0)) throw NonMonotoneFlow("flow map not increasing across the period");

  std::vector<double> xs, ys;
  xs.reserve(3 * m);
  ys.reserve(3 * m);
  for (int shift = -1; shift <= 1; ++shift)
    for (std::size_t j = 0; j < m; ++j) {
      xs.push_back(phi[j] + shift * L);
      ys.push_back(f_at_phi[j]);
    }
  const double origin = phi[0];
  boost::math::interpolators::pchip<std::vector<double>> interp(std::move(xs), std::move(ys));
  Field out(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double y = grid.node(i);
    const double wrapped = y - L * std::floor((y - origin) / L);
    out[i] = interp(wrapped);
  }
  return out;
}

struct EulerianFields {
  Field vx;
  Field sigma;
};

/// Closed-form v_x and sigma on the nodes of grid, translated by -shift.
inline EulerianFields oracle_on_grid(const HSExactData& d, double t, const PeriodicGrid& grid,
                                     double shift = 0.0) {
  const AlongFlow f = exact_along_flow(d, t);
  Field phi = flow_map(d, t);
  for (double& p : phi.values()) p -= shift;
  return {eulerian_reconstruct(phi, f.vx, grid), eulerian_reconstruct(phi, f.rho, grid)};
}

} // namespace wdspec
