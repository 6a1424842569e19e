#pragma once

// Exponential time-rescaling between non-dissipative and weakly dissipative
// solutions:
//
//   v(t, x) = exp(-lambda t) u(tau(t), x),  tau(t) = (1 - exp(-p lambda t)) / (p lambda)
//
// with p = 1 for the b-family / Hunter-Saxton / mu-equations and p = 2 for
// Novikov. lambda = 0 is accepted and maps to the identity.

#include <cmath>
#include <limits>
#include <string>

#include "equations.hpp"
#include "grid.hpp"

namespace wdspec {

struct TimeMapParams {
  double lambda = 0.0;
  int order = 1;

  TimeMapParams(double lambda_, int order_ = 1) : lambda(lambda_), order(order_) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
      throw InvalidData("time map requires finite lambda >= 0");
    if (order != 1 && order != 2) throw InvalidData("time map order must be 1 or 2");
  }

  static TimeMapParams for_equation(const EquationSpec& spec) {
    return {spec.lambda, spec.time_map_order()};
  }

  /// p * lambda.
  double rate() const { return order * lambda; }
  /// Supremum of tau: 1 / (p lambda), +inf for lambda = 0.
  double horizon() const {
    return lambda == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / rate();
  }
};

/// tau(t) = -expm1(-p lambda t) / (p lambda); tau(t) = t when lambda = 0.
inline double tau(double t, const TimeMapParams& p) {
  if (!(t >= 0.0)) throw OutOfRange("tau requires t >= 0");
  if (p.lambda == 0.0) return t;
  const double r = p.rate();
  return -std::expm1(-r * t) / r;
}

/// Inverse of tau on [0, 1/(p lambda)): -log1p(-p lambda s) / (p lambda).
inline double tau_inverse(double s, const TimeMapParams& p) {
  if (!(s >= 0.0)) throw OutOfRange("tau_inverse requires s >= 0");
  if (p.lambda == 0.0) return s;
  const double r = p.rate();
  if (!(r * s < 1.0))
    throw OutOfRange("s = " + std::to_string(s) + " is not below the horizon 1/(p lambda) = " +
                     std::to_string(1.0 / r));
  return -std::log1p(-r * s) / r;
}

/// Scale factor exp(-lambda t) applied to every field. Independent of p.
inline double map_prefactor(double t, const TimeMapParams& p) {
  return p.lambda == 0.0 ? 1.0 : std::exp(-p.lambda * t);
}

/// Maps the non-dissipative fields at time tau(t) to the dissipative fields
/// at time t.
inline Field map_solution(const Field& u_at_tau, double t, const TimeMapParams& p) {
  if (t == 0.0) return u_at_tau;
  return u_at_tau * map_prefactor(t, p);
}

inline TwoComponentState map_solution(const TwoComponentState& u_at_tau, double t,
                                      const TimeMapParams& p) {
  if (t == 0.0) return u_at_tau;
  return u_at_tau * map_prefactor(t, p);
}

/// Reverse direction: recovers u(s) from the dissipative field at
/// t = tau_inverse(s) by multiplying with exp(lambda t).
inline Field unmap_solution(const Field& v_at_t, double s, const TimeMapParams& p) {
  if (s == 0.0) return v_at_t;
  const double t = tau_inverse(s, p);
  return v_at_t * (p.lambda == 0.0 ? 1.0 : std::exp(p.lambda * t));
}

/// Lifespan T of the dissipative solution given the lifespan S of the
/// non-dissipative one: +inf when S >= 1/(p lambda), otherwise tau_inverse(S).
inline double existence_time(double S, double lambda, int order = 1) {
  if (!(S > 0.0)) throw OutOfRange("existence_time requires S > 0");
  const TimeMapParams p(lambda, order);
  if (std::isinf(S) || S >= p.horizon()) return std::numeric_limits<double>::infinity();
  return tau_inverse(S, p);
}

} // namespace wdspec
