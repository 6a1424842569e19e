#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "equations.hpp"

namespace wdspec {

struct IntegratorConfig {
  double dt = 1e-3;
  double t_end = 1.0;
  std::vector<double> snapshot_times;
  /// Run is declared blown up once max|v_x| exceeds this.
  double blowup_threshold = 1e6;
  bool dealias_enabled = true;

  void validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive");
    if (!(t_end >= dt)) throw ConfigError("t_end must be >= dt");
    if (!(blowup_threshold > 0.0)) throw ConfigError("blowup_threshold must be positive");
    for (std::size_t i = 0; i < snapshot_times.size(); ++i) {
      const double s = snapshot_times[i];
      if (!(s >= 0.0 && s <= t_end)) throw ConfigError("snapshot times must lie in [0, t_end]");
      if (i > 0 && !(s > snapshot_times[i - 1]))
        throw ConfigError("snapshot times must be strictly increasing");
    }
  }
};

/// min(1e-3, 0.5 dx / max(1, max|v0|)).
inline double default_dt(const Field& v0) {
  return std::min(1e-3, 0.5 * v0.grid().dx() / std::max(1.0, v0.max_abs()));
}

struct Snapshot {
  double t = 0.0;
  TwoComponentState state;
  Field v;
};

enum class Termination { Completed, BlowUp };

struct Trajectory {
  std::vector<Snapshot> snapshots;
  Termination termination = Termination::Completed;
  /// Time of the step on which blow-up was detected.
  double t_blowup = 0.0;
  /// Last state that passed the blow-up check (t_end on completion).
  double t_last = 0.0;
  std::optional<TwoComponentState> last_state;

  bool blew_up() const { return termination == Termination::BlowUp; }
};

/// max|v_x|, +inf if anything is non-finite.
inline double max_slope(const TwoComponentState& s, const EquationSpec& spec) {
  if (!s.all_finite()) return INFINITY;
  return spectral_derivative(velocity(s, spec), 1).max_abs();
}

/// One classical fourth-order Runge-Kutta step of size h.
inline TwoComponentState rk4_step(const TwoComponentState& y, const EquationSpec& spec, double h,
                                  bool dealias_enabled = true) {
  const auto f = [&](const TwoComponentState& s) { return rhs(s, spec, 0.0, dealias_enabled); };
  const TwoComponentState k1 = f(y);
  const TwoComponentState k2 = f(y + k1 * (0.5 * h));
  const TwoComponentState k3 = f(y + k2 * (0.5 * h));
  const TwoComponentState k4 = f(y + k3 * h);
  TwoComponentState out = y;
  const double w = h / 6.0;
  for (std::size_t j = 0; j < y.m.size(); ++j) {
    out.m[j] += w * (k1.m[j] + 2.0 * k2.m[j] + 2.0 * k3.m[j] + k4.m[j]);
    out.sigma[j] += w * (k1.sigma[j] + 2.0 * k2.sigma[j] + 2.0 * k3.sigma[j] + k4.sigma[j]);
  }
  return out;
}

namespace detail {

// Steps from the current time to each target in turn: full steps of size dt,
// then one shortened step that lands on the target exactly.
inline Trajectory integrate_segments(const TwoComponentState& initial, const EquationSpec& spec,
                                     double dt, const std::vector<double>& targets,
                                     const std::vector<bool>& record, double blowup_threshold,
                                     bool dealias_enabled) {
  Trajectory traj;
  TwoComponentState state = initial;
  double t = 0.0;
  const auto snap = [&](double time, const TwoComponentState& s) {
    traj.snapshots.push_back({time, s, velocity(s, spec)});
  };
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double target = targets[i];
    const double t0 = t;
    const double span = target - t0;
    const double ratio = span / dt;
    const auto full = static_cast<long long>(std::floor(ratio + 1e-9));
    const double tail = span - static_cast<double>(full) * dt;
    const bool has_tail = tail > 1e-9 * dt;
    const long long steps = full + (has_tail ? 1 : 0);
    for (long long k = 0; k < steps; ++k) {
      const bool last = k + 1 == steps;
      const double h = (last && has_tail) ? tail : dt;
      TwoComponentState next = rk4_step(state, spec, h, dealias_enabled);
      const double t_next = last ? target : t0 + static_cast<double>(k + 1) * dt;
      if (!(max_slope(next, spec) <= blowup_threshold)) {
        traj.termination = Termination::BlowUp;
        traj.t_blowup = t_next;
        traj.t_last = t;
        traj.last_state = std::move(state);
        return traj;
      }
      state = std::move(next);
      t = t_next;
    }
    t = target;
    if (record[i]) snap(t, state);
  }
  traj.t_last = t;
  traj.last_state = std::move(state);
  return traj;
}

} // namespace detail

/// Fixed-step RK4 from t = 0 to config.t_end, recording snapshots at the
/// requested times. Blow-up ends the run early and is reported in the
/// trajectory, not thrown.
inline Trajectory integrate(const TwoComponentState& initial, const EquationSpec& spec,
                            const IntegratorConfig& config) {
  config.validate();
  spec.validate();
  std::vector<double> targets;
  std::vector<bool> record;
  for (double s : config.snapshot_times) {
    targets.push_back(s);
    record.push_back(true);
  }
  if (targets.empty() || targets.back() < config.t_end) {
    targets.push_back(config.t_end);
    record.push_back(false);
  }
  return detail::integrate_segments(initial, spec, config.dt, targets, record,
                                    config.blowup_threshold, config.dealias_enabled);
}

struct TimesOptions {
  double blowup_threshold = 1e6;
  bool dealias_enabled = true;
};

/// Integrates with steps <= base_dt so that every requested time is hit
/// exactly, shortening the last step of each segment.
inline Trajectory integrate_to_times(const TwoComponentState& initial, const EquationSpec& spec,
                                     double base_dt, const std::vector<double>& times,
                                     const TimesOptions& opts = {}) {
  spec.validate();
  if (!(base_dt > 0.0)) throw ConfigError("base_dt must be positive");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0)) throw ConfigError("times must be nonnegative");
    if (i > 0 && !(times[i] >= times[i - 1])) throw ConfigError("times must be sorted");
  }
  return detail::integrate_segments(initial, spec, base_dt, times,
                                    std::vector<bool>(times.size(), true), opts.blowup_threshold,
                                    opts.dealias_enabled);
}

} // namespace wdspec
