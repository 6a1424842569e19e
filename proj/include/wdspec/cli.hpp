#pragma once

// Command dispatch for the command-line tool: resolves a RunConfig, runs the
// experiment and writes CSV snapshots, manifest.json and report.json.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "io.hpp"
#include "verify.hpp"

namespace wdspec {

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitRuntime = 2 };

/// Fills in the data-dependent defaults (dt, tolerance).
inline RunConfig resolve(RunConfig c) {
  validate(c);
  if (c.dt == 0.0) {
    const PeriodicGrid g(c.n, c.L);
    c.dt = default_dt(initial_data(c).v_field(g));
  }
  if (c.tolerance == 0.0) c.tolerance = default_tolerance(c.command);
  validate(c);
  return c;
}

namespace detail {

struct Outcome {
  std::string status = "completed";
  json metrics = json::object();
  json report;
  json files = json::array();
};

inline std::string snapshot_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snapshot_%04zu.csv", i);
  return buf;
}

inline Outcome run_simulate(const RunConfig& c, const std::filesystem::path& dir) {
  const PeriodicGrid g(c.n, c.L);
  const InitialData data = initial_data(c);
  const EquationSpec spec = equation_spec(c);
  IntegratorConfig ic;
  ic.dt = c.dt;
  ic.t_end = c.t_end;
  ic.snapshot_times = c.snapshot_times;
  if (ic.snapshot_times.empty() || ic.snapshot_times.back() < c.t_end) ic.snapshot_times.push_back(c.t_end);
  ic.blowup_threshold = c.blowup_threshold;
  ic.dealias_enabled = c.dealias;
  const Trajectory traj = integrate(make_state(data.v_field(g), data.sigma_field(g), spec), spec, ic);

  Outcome out;
  const bool two = is_two_component(c);
  for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
    const auto& s = traj.snapshots[i];
    const std::string name = snapshot_name(i);
    write_csv(dir / name, s.v, two ? &s.state.sigma : nullptr);
    out.files.push_back({{"file", name}, {"t", s.t}});
  }
  out.status = traj.blew_up() ? "blowup" : "completed";
  out.metrics["t_last"] = traj.t_last;
  out.metrics["t_blowup"] = traj.blew_up() ? json(traj.t_blowup) : json(nullptr);
  if (!traj.snapshots.empty()) {
    const auto& last = traj.snapshots.back();
    out.metrics["final_t"] = last.t;
    out.metrics["final_max_abs_v"] = number(last.v.max_abs());
    out.metrics["final_max_abs_vx"] = number(max_slope(last.state, spec));
    out.metrics["final_mean_v"] = number(mean(last.v));
  }
  return out;
}

inline Outcome run_equiv(const RunConfig& c) {
  const PeriodicGrid g(c.n, c.L);
  const InitialData data = initial_data(c);
  TimesOptions opts;
  opts.blowup_threshold = c.blowup_threshold;
  opts.dealias_enabled = c.dealias;
  const auto r = equivalence_experiment(data.v_field(g), data.sigma_field(g), equation_spec(c),
                                        c.check_times, c.dt, c.tolerance, opts);
  Outcome out;
  out.status = r.blowup ? "blowup" : "completed";
  out.report = to_json(r);
  return out;
}

inline Outcome run_hs_exact(const RunConfig& c) {
  const InitialData data = initial_data(c);
  const PeriodicGrid labels(c.n * c.label_refinement, 1.0);
  const HSExactData hs(data.v.derivative(1.0).evaluate(labels), data.sigma.evaluate(labels), c.kappa, c.lambda);
  const PeriodicGrid g(c.n, 1.0);
  const auto r = hs_oracle_experiment(hs, c.check_times, g, c.dt, c.tolerance);
  const auto [v0, sigma0] = hs_solver_initial_data(hs, g);
  Outcome out;
  out.status = r.blowup ? "blowup" : "completed";
  out.report = to_json(r);
  out.metrics["energy_drift"] = number(hs_energy_drift(v0, sigma0, equation_spec(c), c.dt, c.check_times));
  out.metrics["c0"] = hs.c0();
  return out;
}

inline Outcome run_blowup(const RunConfig& c) {
  const PeriodicGrid g(c.n, c.L);
  const InitialData data = initial_data(c);
  BlowupOptions opts;
  opts.threshold_factor = c.blowup_threshold_factor;
  opts.t_max = c.blowup_t_max;
  opts.tolerance = c.tolerance;
  const auto r = blowup_correspondence_experiment(data.v_field(g), data.sigma_field(g), equation_spec(c),
                                                  c.dt, opts);
  Outcome out;
  out.status = "blowup";
  out.report = to_json(r);
  return out;
}

inline Outcome run_converge(const RunConfig& c) {
  const auto r = convergence_study(initial_data(c), equation_spec(c), c.L, c.t_check, c.resolutions, c.dt,
                                   c.tolerance);
  Outcome out;
  out.report = to_json(r, r.classification == "spectral");
  return out;
}

inline Outcome run_dual(const RunConfig& c) {
  const PeriodicGrid g(c.n, c.L);
  const auto r = dual_formulation_check(initial_data(c).v_field(g), c.lambda, c.dt, c.t_check, c.tolerance);
  Outcome out;
  out.status = r.blowup ? "blowup" : "completed";
  out.report = to_json(r);
  return out;
}

inline json error_object(const char* kind, const std::string& message, const std::string& key = {}) {
  json j{{"error", kind}, {"message", message}};
  if (!key.empty()) j["key"] = key;
  return j;
}

} // namespace detail

/// Runs one command and writes its artifacts into config.output_dir.
/// Returns the process exit status; errors are reported on err as a JSON object.
inline int run(const RunConfig& config, std::ostream& err = std::cerr) {
  try {
    const RunConfig c = resolve(config);
    const std::filesystem::path dir(c.output_dir);
    std::filesystem::create_directories(dir);

    detail::Outcome out;
    if (c.command == "simulate") out = detail::run_simulate(c, dir);
    else if (c.command == "equiv") out = detail::run_equiv(c);
    else if (c.command == "hs-exact") out = detail::run_hs_exact(c);
    else if (c.command == "blowup") out = detail::run_blowup(c);
    else if (c.command == "converge") out = detail::run_converge(c);
    else out = detail::run_dual(c);

    json manifest{{"version", kVersion},
                  {"command", c.command},
                  {"config", to_json(c)},
                  {"status", out.status},
                  {"metrics", out.metrics},
                  {"files", out.files}};
    if (!out.report.is_null()) {
      manifest["report"] = out.report;
      write_json(dir / "report.json", out.report);
    }
    write_json(dir / "manifest.json", manifest);
    return kExitOk;
  } catch (const ConfigError& e) {
    err << detail::error_object(e.kind(), e.what(), e.key()).dump() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << detail::error_object(e.kind(), e.what()).dump() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << detail::error_object("RuntimeError", e.what()).dump() << "\n";
    return kExitRuntime;
  }
}

} // namespace wdspec
