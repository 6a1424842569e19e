#pragma once

// CSV snapshots and JSON serialization of configs and reports.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "verify.hpp"

namespace wdspec {

inline constexpr const char* kVersion = "1.0.0";

using nlohmann::json;

// ---------------------------------------------------------------------------
// CSV

/// Writes `x,v[,sigma]` with 17 significant digits.
inline void write_csv(const std::filesystem::path& path, const Field& v, const Field* sigma) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << (sigma ? "x,v,sigma\n" : "x,v\n");
  char buf[96];
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sigma)
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", v.grid().node(j), v[j], (*sigma)[j]);
    else
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", v.grid().node(j), v[j]);
    out << buf;
  }
  if (!out) throw Error("write to " + path.string() + " failed");
}

struct CsvSnapshot {
  std::vector<double> x;
  std::vector<double> v;
  std::optional<std::vector<double>> sigma;
};

inline CsvSnapshot read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::string header;
  std::getline(in, header);
  CsvSnapshot s;
  if (header == "x,v,sigma") s.sigma.emplace();
  else if (header != "x,v") throw InvalidData("unexpected CSV header '" + header + "'");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> cols;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cols.push_back(detail::parse_double("csv", std::string_view(line).substr(
                                                     start, comma == std::string::npos ? std::string::npos
                                                                                       : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (cols.size() != (s.sigma ? 3u : 2u)) throw InvalidData("malformed CSV row '" + line + "'");
    s.x.push_back(cols[0]);
    s.v.push_back(cols[1]);
    if (s.sigma) s.sigma->push_back(cols[2]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// JSON

/// Non-finite numbers become null.
inline json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

inline json to_json(const RunConfig& c) {
  return {{"command", c.command},
          {"equation", c.equation},
          {"mkind", to_string(c.mkind)},
          {"b", c.b},
          {"kappa", c.kappa},
          {"lambda", c.lambda},
          {"n", c.n},
          {"L", c.L},
          {"dt", c.dt},
          {"t_end", c.t_end},
          {"snapshot_times", c.snapshot_times},
          {"check_times", c.check_times},
          {"resolutions", c.resolutions},
          {"t_check", c.t_check},
          {"initial", c.initial},
          {"v0_cos", c.v0_cos},
          {"v0_sin", c.v0_sin},
          {"sigma0_cos", c.sigma0_cos},
          {"sigma0_sin", c.sigma0_sin},
          {"dealias", c.dealias},
          {"blowup_threshold", c.blowup_threshold},
          {"blowup_threshold_factor", c.blowup_threshold_factor},
          {"blowup_t_max", c.blowup_t_max},
          {"label_refinement", c.label_refinement},
          {"tolerance", c.tolerance},
          {"output_dir", c.output_dir},
          {"seed", c.seed}};
}

/// Rebuilds a RunConfig from the object written by to_json, going through
/// parse_config so that the same validation applies.
inline RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("config JSON must be an object");
  std::ostringstream text;
  const auto scalar = [](const json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return detail::format_double(v.get<double>());
    return v.dump();
  };
  for (const auto& [key, value] : j.items()) {
    text << key << " = ";
    if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) text << (i ? ", " : "") << scalar(value[i]);
    } else {
      text << scalar(value);
    }
    text << "\n";
  }
  return parse_config(text.str());
}

inline json to_json(const EquationSpec& s) {
  json j{{"equation", s.name()}, {"lambda", s.lambda}};
  if (const auto* bf = std::get_if<BFamily>(&s.family)) {
    j["mkind"] = to_string(bf->mkind);
    j["b"] = bf->b;
    j["kappa"] = bf->kappa;
  }
  return j;
}

inline json to_json(const FieldErrors& e) {
  return {{"t", e.t}, {"v_max", number(e.v_max)}, {"v_l2", number(e.v_l2)},
          {"sigma_max", number(e.sigma_max)}, {"sigma_l2", number(e.sigma_l2)}};
}

inline json to_json(const std::optional<BlowUpRecord>& b) {
  if (!b) return nullptr;
  return {{"side", b->side}, {"t", b->t}};
}

inline const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

inline json to_json(const EquivalenceReport& r) {
  json errors = json::array();
  for (const auto& e : r.errors) errors.push_back(to_json(e));
  return {{"spec", to_json(r.spec)},
          {"lambda", r.lambda},
          {"order", r.order},
          {"n", r.n},
          {"L", r.L},
          {"dt", r.dt},
          {"check_times", r.check_times},
          {"compared", r.compared},
          {"errors", errors},
          {"tolerance", r.tolerance},
          {"blowup", to_json(r.blowup)},
          {"max_error", number(r.max_error())},
          {"pass", r.pass},
          {"verdict", verdict(r.pass)}};
}

inline json to_json(const BlowupReport& r) {
  return {{"spec", to_json(r.spec)},
          {"lambda", r.lambda},
          {"order", r.order},
          {"n", r.n},
          {"dt", r.dt},
          {"level_lower", r.level_lower},
          {"level_upper", r.level_upper},
          {"S_measured", number(r.S_measured)},
          {"S_crossing", number(r.S_crossing)},
          {"T_predicted", number(r.T_predicted)},
          {"T_measured", r.T_measured ? number(*r.T_measured) : json(nullptr)},
          {"dissipative_horizon", r.dissipative_horizon},
          {"relative_mismatch", number(r.relative_mismatch)},
          {"pass", r.pass},
          {"verdict", verdict(r.pass)}};
}

inline json to_json(const ConvergenceReport& r, bool pass) {
  json errors = json::array(), ratios = json::array();
  for (double e : r.errors) errors.push_back(number(e));
  for (double q : r.ratios) ratios.push_back(number(q));
  return {{"resolutions", r.resolutions},
          {"errors", errors},
          {"ratios", ratios},
          {"classification", r.classification},
          {"floor", r.floor},
          {"pass", pass},
          {"verdict", verdict(pass)}};
}

inline json to_json(const DualReport& r) {
  return {{"lambda", r.lambda},
          {"n", r.n},
          {"L", r.L},
          {"dt", r.dt},
          {"t_check", r.t_check},
          {"max_diff", number(r.max_diff)},
          {"blowup", to_json(r.blowup)},
          {"tolerance", r.tolerance},
          {"pass", r.pass},
          {"verdict", verdict(r.pass)}};
}

inline void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << j.dump(2) << "\n";
  if (!out) throw Error("write to " + path.string() + " failed");
}

inline json read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return json::parse(in);
}

} // namespace wdspec
