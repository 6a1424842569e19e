#pragma once

// End-to-end experiments: direct dissipative runs against mapped
// non-dissipative runs, the Hunter-Saxton closed form, lifespan
// correspondence, resolution studies and the two CH formulations.

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "equations.hpp"
#include "hs_exact.hpp"
#include "initial_data.hpp"
#include "spectral.hpp"
#include "timestepping.hpp"
#include "transform.hpp"

namespace wdspec {

struct FieldErrors {
  double t = 0.0;
  double v_max = 0.0;
  double v_l2 = 0.0;
  double sigma_max = 0.0;
  double sigma_l2 = 0.0;
};

/// Which run broke first, and when.
struct BlowUpRecord {
  std::string side;  // "dissipative" or "non_dissipative"
  double t = 0.0;    // in the broken run's own time variable
};

struct EquivalenceReport {
  EquationSpec spec;
  double lambda = 0.0;
  int order = 1;
  std::size_t n = 0;
  double L = 1.0;
  double dt = 0.0;
  std::vector<double> check_times;
  /// "v" for velocity comparisons, "vx" for the slope comparisons of the
  /// Hunter-Saxton closed form.
  std::string compared = "v";
  std::vector<FieldErrors> errors;
  double tolerance = 0.0;
  std::optional<BlowUpRecord> blowup;
  bool pass = false;

  double max_error() const {
    double e = 0.0;
    for (const auto& fe : errors) e = std::max({e, fe.v_max, fe.sigma_max});
    return blowup ? std::numeric_limits<double>::infinity() : e;
  }
};

namespace detail {

inline FieldErrors compare_fields(double t, const Field& v, const Field& v_ref, const Field& s,
                                  const Field& s_ref) {
  const Field dv = v - v_ref;
  const Field ds = s - s_ref;
  return {t, dv.max_abs(), dv.l2_norm(), ds.max_abs(), ds.l2_norm()};
}

inline EquivalenceReport make_report(const EquationSpec& spec, const PeriodicGrid& g, double dt,
                                     const std::vector<double>& times, double tol) {
  EquivalenceReport r;
  r.spec = spec;
  r.lambda = spec.lambda;
  r.order = spec.time_map_order();
  r.n = g.size();
  r.L = g.length();
  r.dt = dt;
  r.check_times = times;
  r.tolerance = tol;
  return r;
}

inline void finalize(EquivalenceReport& r) {
  r.pass = !r.blowup && r.errors.size() == r.check_times.size() && r.max_error() <= r.tolerance;
}

} // namespace detail

/// Runs the dissipative system to each check time and the lambda = 0 system
/// to tau(t_k), maps the latter with exp(-lambda t_k) and reports the field
/// differences. Both runs start from the same data.
inline EquivalenceReport equivalence_experiment(const Field& v0, const Field& sigma0,
                                                const EquationSpec& spec,
                                                const std::vector<double>& check_times, double dt,
                                                double tolerance = 1e-7,
                                                const TimesOptions& opts = {}) {
  if (!(spec.lambda > 0.0)) throw InvalidData("equivalence experiment needs lambda > 0");
  const TimeMapParams params = TimeMapParams::for_equation(spec);
  auto report = detail::make_report(spec, v0.grid(), dt, check_times, tolerance);

  const TwoComponentState initial = make_state(v0, sigma0, spec);
  const Trajectory direct = integrate_to_times(initial, spec, dt, check_times, opts);
  std::vector<double> taus;
  for (double t : check_times) taus.push_back(tau(t, params));
  const Trajectory reference = integrate_to_times(initial, spec.with_lambda(0.0), dt, taus, opts);

  if (direct.blew_up()) report.blowup = BlowUpRecord{"dissipative", direct.t_blowup};
  else if (reference.blew_up())
    report.blowup = BlowUpRecord{"non_dissipative", reference.t_blowup};

  const std::size_t available = std::min(direct.snapshots.size(), reference.snapshots.size());
  for (std::size_t k = 0; k < available; ++k) {
    const double t = check_times[k];
    const auto& d = direct.snapshots[k];
    const auto& u = reference.snapshots[k];
    report.errors.push_back(detail::compare_fields(t, d.v, map_solution(u.v, t, params),
                                                   d.state.sigma,
                                                   map_solution(u.state.sigma, t, params)));
  }
  detail::finalize(report);
  return report;
}

/// Reverse direction: rebuilds u(s) = exp(lambda t) v(t), t = tau_inverse(s),
/// from the dissipative run and compares with the lambda = 0 run at s.
inline EquivalenceReport reverse_experiment(const Field& v0, const Field& sigma0,
                                            const EquationSpec& spec,
                                            const std::vector<double>& s_times, double dt,
                                            double tolerance = 1e-7) {
  if (!(spec.lambda > 0.0)) throw InvalidData("reverse experiment needs lambda > 0");
  const TimeMapParams params = TimeMapParams::for_equation(spec);
  auto report = detail::make_report(spec, v0.grid(), dt, s_times, tolerance);

  const TwoComponentState initial = make_state(v0, sigma0, spec);
  std::vector<double> ts;
  for (double s : s_times) ts.push_back(tau_inverse(s, params));
  const Trajectory direct = integrate_to_times(initial, spec, dt, ts);
  const Trajectory reference = integrate_to_times(initial, spec.with_lambda(0.0), dt, s_times);
  if (reference.blew_up()) report.blowup = BlowUpRecord{"non_dissipative", reference.t_blowup};
  else if (direct.blew_up()) report.blowup = BlowUpRecord{"dissipative", direct.t_blowup};

  const std::size_t available = std::min(direct.snapshots.size(), reference.snapshots.size());
  for (std::size_t k = 0; k < available; ++k) {
    const double s = s_times[k];
    const auto& d = direct.snapshots[k];
    const auto& u = reference.snapshots[k];
    report.errors.push_back(detail::compare_fields(s, unmap_solution(d.v, s, params), u.v,
                                                   unmap_solution(d.state.sigma, s, params),
                                                   u.state.sigma));
  }
  detail::finalize(report);
  return report;
}

/// Solver-side initial data for the closed form: v0 is the zero-mean
/// antiderivative of v0_x, both fields resampled onto the solver grid.
inline std::pair<Field, Field> hs_solver_initial_data(const HSExactData& data, const PeriodicGrid& grid) {
  if (grid.length() != data.grid().length()) throw GridError("solver and label grids differ in length");
  Field v0 = resample(antiderivative(data.v0x()), grid.size());
  const double mu = mean(v0);
  for (double& x : v0.values()) x -= mu;
  return {v0, resample(data.rho0(), grid.size())};
}

/// Integrates the weakly dissipative Hunter-Saxton system (m = -v_xx, b = 2)
/// in the mean(v) = 0 gauge and compares v_x and sigma with the closed form,
/// translated by the gauge shift A(t) and interpolated onto the solver grid.
inline EquivalenceReport hs_oracle_experiment(const HSExactData& data,
                                              const std::vector<double>& check_times,
                                              const PeriodicGrid& grid, double dt,
                                              double tolerance = 1e-5) {
  const EquationSpec spec = EquationSpec::bfamily(MKind::NegLaplacian, 2.0, data.kappa(), data.lambda());
  auto report = detail::make_report(spec, grid, dt, check_times, tolerance);
  report.compared = "vx";

  const auto [v0, sigma0] = hs_solver_initial_data(data, grid);
  const Trajectory run = integrate_to_times(make_state(v0, sigma0, spec), spec, dt, check_times);
  if (run.blew_up()) report.blowup = BlowUpRecord{"dissipative", run.t_blowup};
  for (std::size_t k = 0; k < run.snapshots.size(); ++k) {
    const double t = check_times[k];
    const auto& snap = run.snapshots[k];
    const EulerianFields oracle = oracle_on_grid(data, t, grid, gauge_shift(data, t));
    report.errors.push_back(detail::compare_fields(t, spectral_derivative(snap.v, 1), oracle.vx,
                                                   snap.state.sigma, oracle.sigma));
  }
  detail::finalize(report);
  return report;
}

/// Largest relative deviation of exp(2 lambda t) int (v_x^2 + kappa sigma^2) dx
/// from its initial value over the sample times of a Hunter-Saxton run.
inline double hs_energy_drift(const Field& v0, const Field& sigma0, const EquationSpec& spec,
                              double dt, const std::vector<double>& times) {
  const auto* bf = std::get_if<BFamily>(&spec.family);
  if (!bf || bf->mkind != MKind::NegLaplacian) throw InvalidData("energy drift applies to m = -v_xx runs");
  const auto energy = [&](const Field& v, const Field& s) {
    const Field vx = spectral_derivative(v, 1);
    double e = 0.0;
    for (std::size_t j = 0; j < vx.size(); ++j) e += vx[j] * vx[j] + bf->kappa * s[j] * s[j];
    return e * vx.grid().dx();
  };
  const TwoComponentState initial = make_state(v0, sigma0, spec);
  const double e0 = energy(velocity(initial, spec), initial.sigma);
  const Trajectory run = integrate_to_times(initial, spec, dt, times);
  if (run.blew_up()) return std::numeric_limits<double>::infinity();
  double drift = 0.0;
  for (const auto& snap : run.snapshots) {
    const double scaled = std::exp(2.0 * spec.lambda * snap.t) * energy(snap.v, snap.state.sigma);
    drift = std::max(drift, std::abs(scaled - e0) / std::abs(e0));
  }
  return drift;
}

// ---------------------------------------------------------------------------
// Lifespan correspondence

/// Two threshold crossings of max|v_x| and the singular time obtained by
/// extrapolating 1/max|v_x| linearly through them to zero.
struct BlowupEstimate {
  double t_lower = 0.0;  ///< crossing of the lower level
  double t_upper = 0.0;  ///< crossing of the upper level
  double t_singular = 0.0;
};

struct BlowupOptions {
  /// Upper detection level as a multiple of max|v0_x|; the lower level is half of it.
  double threshold_factor = 10.0;
  /// Horizon of the lambda = 0 run.
  double t_max = 5.0;
  /// Bisection iterations used to locate a crossing inside one step.
  int bisection_iterations = 40;
  /// Allowed relative mismatch between measured and predicted lifespan.
  double tolerance = 0.1;
};

/// Steps with RK4 until max|v_x| crosses the lower and then the upper level.
/// Each crossing time is refined by bisecting the length of the crossing step.
/// Non-finite states count as crossings.
inline std::optional<BlowupEstimate> detect_blowup(const TwoComponentState& initial,
                                                   const EquationSpec& spec, double dt,
                                                   double level_lower, double level_upper,
                                                   double t_max, int bisection_iterations = 40) {
  const double levels[2] = {level_lower, level_upper};
  double crossing[2] = {0.0, 0.0};
  int found = 0;
  TwoComponentState state = initial;
  double t = 0.0;
  const auto above = [&](const TwoComponentState& s, double level) {
    return !(max_slope(s, spec) <= level);
  };
  while (found < 2 && t < t_max) {
    const double h = std::min(dt, t_max - t);
    TwoComponentState next = rk4_step(state, spec, h);
    if (above(next, levels[found])) {
      double lo = 0.0, hi = h;
      for (int i = 0; i < bisection_iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (above(rk4_step(state, spec, mid), levels[found])) hi = mid;
        else lo = mid;
      }
      crossing[found] = t + hi;
      ++found;
      continue;  // the same step may also cross the upper level
    }
    state = std::move(next);
    t += h;
  }
  if (found < 2) return std::nullopt;
  BlowupEstimate e{crossing[0], crossing[1], crossing[1]};
  const double y0 = 1.0 / levels[0], y1 = 1.0 / levels[1];
  const double dt_cross = crossing[1] - crossing[0];
  e.t_singular = crossing[1] + y1 * dt_cross / (y0 - y1);
  return e;
}

struct BlowupReport {
  EquationSpec spec;
  double lambda = 0.0;
  int order = 1;
  std::size_t n = 0;
  double dt = 0.0;
  double level_lower = 0.0;
  double level_upper = 0.0;
  double S_measured = 0.0;        ///< non-dissipative singular time
  double S_crossing = 0.0;        ///< non-dissipative upper-level crossing
  double T_predicted = 0.0;       ///< existence_time(S_measured), may be +inf
  std::optional<double> T_measured;  ///< dissipative singular time, if observed
  double dissipative_horizon = 0.0;
  double relative_mismatch = 0.0;
  bool pass = false;
};

/// Measures the lifespan S of the lambda = 0 run and T of the dissipative
/// run, and compares T with existence_time(S, lambda, p).
inline BlowupReport blowup_correspondence_experiment(const Field& u0, const Field& sigma0,
                                                     const EquationSpec& spec, double dt,
                                                     const BlowupOptions& opts = {}) {
  if (!(spec.lambda > 0.0)) throw InvalidData("blow-up experiment needs lambda > 0");
  const TwoComponentState initial = make_state(u0, sigma0, spec);
  const double slope0 = std::max(spectral_derivative(u0, 1).max_abs(), 1e-300);
  BlowupReport r;
  r.spec = spec;
  r.lambda = spec.lambda;
  r.order = spec.time_map_order();
  r.n = u0.size();
  r.dt = dt;
  r.level_upper = opts.threshold_factor * slope0;
  r.level_lower = 0.5 * r.level_upper;

  const auto nondiss = detect_blowup(initial, spec.with_lambda(0.0), dt, r.level_lower,
                                     r.level_upper, opts.t_max, opts.bisection_iterations);
  r.T_predicted = std::numeric_limits<double>::infinity();
  r.dissipative_horizon = 3.0 / spec.lambda;
  if (nondiss) {
    r.S_measured = nondiss->t_singular;
    r.S_crossing = nondiss->t_upper;
    r.T_predicted = existence_time(r.S_measured, spec.lambda, r.order);
    if (std::isfinite(r.T_predicted))
      r.dissipative_horizon = std::max(r.dissipative_horizon, 1.5 * r.T_predicted);
  }
  const auto diss = detect_blowup(initial, spec, dt, r.level_lower, r.level_upper,
                                  r.dissipative_horizon, opts.bisection_iterations);
  if (!nondiss && !diss) throw NoBlowUpObserved("neither run crossed max|v_x| = " + std::to_string(r.level_upper));
  if (diss) r.T_measured = diss->t_singular;

  if (!nondiss) {
    r.pass = false;
  } else if (std::isfinite(r.T_predicted)) {
    r.relative_mismatch = r.T_measured ? std::abs(*r.T_measured - r.T_predicted) / r.T_predicted
                                       : std::numeric_limits<double>::infinity();
    r.pass = r.relative_mismatch <= opts.tolerance;
  } else {
    r.relative_mismatch = 0.0;
    r.pass = !r.T_measured;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Resolution study and dual formulation

struct ConvergenceReport {
  std::vector<std::size_t> resolutions;
  std::vector<double> errors;
  /// errors[i] / errors[i+1].
  std::vector<double> ratios;
  std::string classification;  // "spectral", "algebraic" or "stalled"
  double floor = 1e-9;
};

/// Spectral when every doubling shrinks the error by >= 10x (or both errors
/// sit below the floor); algebraic when it shrinks at all; stalled otherwise.
inline std::string classify_decay(const std::vector<std::size_t>& res, const std::vector<double>& err,
                                  double floor) {
  bool spectral = true, decreasing = true;
  for (std::size_t i = 0; i + 1 < err.size(); ++i) {
    const bool below = err[i] <= floor && err[i + 1] <= floor;
    const double doublings = std::log2(static_cast<double>(res[i + 1]) / static_cast<double>(res[i]));
    const double needed = std::pow(10.0, doublings);
    if (!below && !(err[i] >= needed * err[i + 1])) spectral = false;
    if (!below && !(err[i] > err[i + 1])) decreasing = false;
  }
  if (spectral) return "spectral";
  return decreasing ? "algebraic" : "stalled";
}

/// Equivalence error at t_check for each resolution, with the decay class.
inline ConvergenceReport convergence_study(const InitialData& data, const EquationSpec& spec,
                                           double L, double t_check,
                                           const std::vector<std::size_t>& resolutions, double dt,
                                           double floor = 1e-9) {
  for (std::size_t i = 0; i + 1 < resolutions.size(); ++i)
    if (!(resolutions[i + 1] > resolutions[i])) throw InvalidData("resolutions must increase");
  ConvergenceReport r;
  r.resolutions = resolutions;
  r.floor = floor;
  for (std::size_t n : resolutions) {
    const PeriodicGrid g(n, L);
    const auto rep = equivalence_experiment(data.v_field(g), data.sigma_field(g), spec, {t_check}, dt);
    r.errors.push_back(rep.max_error());
  }
  for (std::size_t i = 0; i + 1 < r.errors.size(); ++i) r.ratios.push_back(r.errors[i] / r.errors[i + 1]);
  r.classification = classify_decay(resolutions, r.errors, floor);
  return r;
}

struct DualReport {
  double lambda = 0.0;
  std::size_t n = 0;
  double L = 1.0;
  double dt = 0.0;
  double t_check = 0.0;
  double max_diff = 0.0;
  std::optional<BlowUpRecord> blowup;
  double tolerance = 1e-8;
  bool pass = false;
};

/// Integrates CH in momentum form (m = v - v_xx, b = 2) and in nonlocal
/// transport form and reports the velocity difference at t_check.
inline DualReport dual_formulation_check(const Field& v0, double lambda, double dt, double t_check,
                                         double tolerance = 1e-8) {
  const EquationSpec momentum = EquationSpec::camassa_holm(lambda);
  const EquationSpec weak = EquationSpec::ch_weak_form(lambda);
  const Trajectory a = integrate_to_times(make_state(v0, momentum), momentum, dt, {t_check});
  const Trajectory b = integrate_to_times(make_state(v0, weak), weak, dt, {t_check});
  DualReport r{lambda, v0.size(), v0.grid().length(), dt, t_check};
  r.tolerance = tolerance;
  if (a.blew_up()) r.blowup = BlowUpRecord{"momentum_form", a.t_blowup};
  else if (b.blew_up()) r.blowup = BlowUpRecord{"transport_form", b.t_blowup};
  if (r.blowup) {
    r.max_diff = std::numeric_limits<double>::infinity();
    return r;
  }
  r.max_diff = max_diff(a.snapshots.back().v, b.snapshots.back().v);
  r.pass = r.max_diff <= tolerance;
  return r;
}

/// Runs independent experiments concurrently and returns their results in
/// input order.
template <class Task>
auto run_parallel(const std::vector<Task>& tasks) {
  using Result = std::invoke_result_t<const Task&>;
  std::vector<std::future<Result>> futures;
  futures.reserve(tasks.size());
  for (const auto& task : tasks) futures.push_back(std::async(std::launch::async, task));
  std::vector<Result> out;
  out.reserve(tasks.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

} // namespace wdspec
