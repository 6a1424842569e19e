#pragma once

// Run configuration: a line-based `key = value` format with `#` comments and
// comma-separated lists.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "equations.hpp"
#include "errors.hpp"
#include "initial_data.hpp"

namespace wdspec {

struct RunConfig {
  std::string command = "simulate";
  std::string equation = "bfamily";
  MKind mkind = MKind::Helmholtz;
  double b = 2.0;
  int kappa = 1;
  double lambda = 0.0;
  std::size_t n = 256;
  double L = 1.0;
  /// 0 selects default_dt of the initial velocity.
  double dt = 0.0;
  double t_end = 1.0;
  std::vector<double> snapshot_times;
  std::vector<double> check_times{0.25, 0.5, 1.0};
  std::vector<std::size_t> resolutions{64, 128, 256};
  double t_check = 0.5;
  std::string initial = "smooth";
  std::vector<double> v0_cos;
  std::vector<double> v0_sin;
  std::vector<double> sigma0_cos;
  std::vector<double> sigma0_sin;
  bool dealias = true;
  double blowup_threshold = 1e6;
  double blowup_threshold_factor = 10.0;
  double blowup_t_max = 5.0;
  std::size_t label_refinement = 8;
  /// 0 selects the command's default tolerance.
  double tolerance = 0.0;
  std::string output_dir = ".";
  std::uint64_t seed = 0;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

inline const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> k{
      "command", "equation", "mkind", "b", "kappa", "lambda", "n", "L", "dt", "t_end",
      "snapshot_times", "check_times", "resolutions", "t_check", "initial", "v0_cos", "v0_sin",
      "sigma0_cos", "sigma0_sin", "dealias", "blowup_threshold", "blowup_threshold_factor",
      "blowup_t_max", "label_refinement", "tolerance", "output_dir", "seed"};
  return k;
}

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"simulate", "equiv", "hs-exact", "blowup", "converge", "dual"};
  return c;
}

/// Tolerance used when the config leaves it at 0.
inline double default_tolerance(const std::string& command) {
  if (command == "equiv") return 1e-7;
  if (command == "hs-exact") return 1e-5;
  if (command == "blowup") return 0.1;
  if (command == "dual") return 1e-8;
  if (command == "converge") return 1e-9;
  return 0.0;
}

inline std::optional<MKind> mkind_from_string(std::string_view s) {
  if (s == "helmholtz") return MKind::Helmholtz;
  if (s == "neglaplacian") return MKind::NegLaplacian;
  if (s == "muhelmholtz") return MKind::MuHelmholtz;
  return std::nullopt;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_double(const std::string& key, std::string_view v) {
  v = trim(v);
  double out = 0.0;
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
    throw ParseError(key, "expected a real number, got '" + std::string(v) + "'");
  return out;
}

inline long long parse_int(const std::string& key, std::string_view v) {
  v = trim(v);
  long long out = 0;
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
    throw ParseError(key, "expected an integer, got '" + std::string(v) + "'");
  return out;
}

inline std::vector<std::string_view> split_list(std::string_view v) {
  std::vector<std::string_view> out;
  if (trim(v).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = v.find(',', start);
    out.push_back(trim(v.substr(start, comma == std::string_view::npos ? v.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::vector<double> parse_double_list(const std::string& key, std::string_view v) {
  std::vector<double> out;
  for (auto item : split_list(v)) out.push_back(parse_double(key, item));
  return out;
}

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    if constexpr (std::is_floating_point_v<T>) out += format_double(xs[i]);
    else out += std::to_string(xs[i]);
  }
  return out;
}

inline bool is_grid_size(long long n) { return n >= 16 && n % 2 == 0; }

inline void require(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw ValidationError(key, what);
}

inline void require_increasing(const std::vector<double>& xs, const std::string& key, bool allow_zero) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require(std::isfinite(xs[i]) && (allow_zero ? xs[i] >= 0.0 : xs[i] > 0.0), key,
            allow_zero ? "times must be finite and >= 0" : "times must be finite and > 0");
    if (i > 0) require(xs[i] > xs[i - 1], key, "times must be strictly increasing");
  }
}

} // namespace detail

/// Range and cross-key checks. Throws ValidationError naming the key.
inline void validate(const RunConfig& c) {
  using detail::require;
  require(std::find(commands().begin(), commands().end(), c.command) != commands().end(), "command",
          "must be one of simulate, equiv, hs-exact, blowup, converge, dual");
  require(c.equation == "bfamily" || c.equation == "novikov" || c.equation == "chweak", "equation",
          "must be one of bfamily, novikov, chweak");
  require(std::isfinite(c.b), "b", "must be finite");
  require(c.kappa == 1 || c.kappa == -1, "kappa", "must be in {-1, +1}");
  require(std::isfinite(c.lambda) && c.lambda >= 0.0, "lambda", "must be finite and >= 0");
  require(detail::is_grid_size(static_cast<long long>(c.n)), "n", "must be even and >= 16");
  require(std::isfinite(c.L) && c.L > 0.0, "L", "must be finite and > 0");
  require(std::isfinite(c.dt) && c.dt >= 0.0, "dt", "must be finite and >= 0 (0 selects the default)");
  require(std::isfinite(c.t_end) && c.t_end > 0.0, "t_end", "must be finite and > 0");
  require(c.dt <= c.t_end, "dt", "must not exceed t_end");
  detail::require_increasing(c.snapshot_times, "snapshot_times", true);
  require(c.snapshot_times.empty() || c.snapshot_times.back() <= c.t_end, "snapshot_times",
          "must lie in [0, t_end]");
  detail::require_increasing(c.check_times, "check_times", false);
  for (std::size_t i = 0; i < c.resolutions.size(); ++i) {
    require(detail::is_grid_size(static_cast<long long>(c.resolutions[i])), "resolutions",
            "every entry must be even and >= 16");
    if (i > 0) require(c.resolutions[i] > c.resolutions[i - 1], "resolutions", "must be strictly increasing");
  }
  require(std::isfinite(c.t_check) && c.t_check > 0.0, "t_check", "must be finite and > 0");
  require(std::find(presets::names().begin(), presets::names().end(), c.initial) != presets::names().end(),
          "initial", "unknown preset '" + c.initial + "'");
  for (const auto* list : {&c.v0_cos, &c.v0_sin, &c.sigma0_cos, &c.sigma0_sin})
    for (double x : *list) require(std::isfinite(x), "initial", "series coefficients must be finite");
  require(c.initial == "series" ||
              (c.v0_cos.empty() && c.v0_sin.empty() && c.sigma0_cos.empty() && c.sigma0_sin.empty()),
          "v0_cos", "series coefficients require initial = series");
  require(c.blowup_threshold > 0.0 && std::isfinite(c.blowup_threshold), "blowup_threshold", "must be > 0");
  require(c.blowup_threshold_factor > 1.0 && std::isfinite(c.blowup_threshold_factor),
          "blowup_threshold_factor", "must be > 1");
  require(c.blowup_t_max > 0.0 && std::isfinite(c.blowup_t_max), "blowup_t_max", "must be > 0");
  require(c.label_refinement >= 1 && c.label_refinement <= 64, "label_refinement", "must be in [1, 64]");
  require(std::isfinite(c.tolerance) && c.tolerance >= 0.0, "tolerance",
          "must be finite and >= 0 (0 selects the default)");
  require(!c.output_dir.empty(), "output_dir", "must not be empty");

  const bool two_component_data = !c.sigma0_cos.empty() || !c.sigma0_sin.empty() ||
                                   (c.initial != "series" && !presets::by_name(c.initial, c.seed).sigma.cos_coeffs.empty());
  if (c.equation != "bfamily")
    require(!two_component_data, "initial", "two-component data needs equation = bfamily");
  if (c.command == "equiv" || c.command == "blowup")
    require(c.lambda > 0.0, "lambda", "command " + c.command + " needs lambda > 0");
  if (c.command == "equiv" || c.command == "hs-exact")
    require(!c.check_times.empty(), "check_times", "must not be empty");
  if (c.command == "converge") require(!c.resolutions.empty(), "resolutions", "must not be empty");
  if (c.command == "dual") require(c.equation == "bfamily" || c.equation == "chweak", "equation",
                                   "dual compares the two Camassa-Holm forms");
  if (c.command == "hs-exact" || c.command == "blowup")
    require(c.equation == "bfamily", "equation", "command " + c.command + " needs equation = bfamily");
  if (c.command == "hs-exact") {
    require(c.L == 1.0, "L", "the closed form lives on the unit circle (L = 1)");
    require(c.mkind == MKind::NegLaplacian, "mkind", "hs-exact needs mkind = neglaplacian");
    require(c.b == 2.0, "b", "hs-exact needs b = 2");
  }
  if (c.equation == "bfamily" && c.mkind == MKind::NegLaplacian)
    require(c.initial != "constant", "initial", "m = -v_xx cannot represent constant data");
}

/// Parses and validates a configuration. Keys not given keep their defaults.
inline RunConfig parse_config(std::string_view text) {
  RunConfig c;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value', got '" +
                       std::string(line) + "'");
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError("line " + std::to_string(line_no) + ": missing key");
    if (std::find(config_keys().begin(), config_keys().end(), key) == config_keys().end())
      throw UnknownKey(key, "unknown key");
    if (!seen.insert(key).second) throw ParseError(key, "given more than once");

    const auto scalar = [&]() -> std::string {
      if (value.empty()) throw ParseError(key, "missing value");
      return std::string(value);
    };
    const auto size_value = [&](std::string_view v) {
      const long long x = detail::parse_int(key, v);
      if (x < 0) throw ValidationError(key, "must be >= 0");
      return static_cast<std::size_t>(x);
    };

    if (key == "command") c.command = scalar();
    else if (key == "equation") c.equation = scalar();
    else if (key == "mkind") {
      const auto k = mkind_from_string(scalar());
      if (!k) throw ValidationError(key, "must be one of helmholtz, neglaplacian, muhelmholtz");
      c.mkind = *k;
    } else if (key == "b") c.b = detail::parse_double(key, scalar());
    else if (key == "kappa") {
      const long long k = detail::parse_int(key, scalar());
      if (k != 1 && k != -1) throw ValidationError(key, "must be in {-1, +1}, got " + std::to_string(k));
      c.kappa = static_cast<int>(k);
    } else if (key == "lambda") c.lambda = detail::parse_double(key, scalar());
    else if (key == "n") c.n = size_value(scalar());
    else if (key == "L") c.L = detail::parse_double(key, scalar());
    else if (key == "dt") c.dt = detail::parse_double(key, scalar());
    else if (key == "t_end") c.t_end = detail::parse_double(key, scalar());
    else if (key == "snapshot_times") c.snapshot_times = detail::parse_double_list(key, value);
    else if (key == "check_times") c.check_times = detail::parse_double_list(key, value);
    else if (key == "resolutions") {
      c.resolutions.clear();
      for (auto item : detail::split_list(value)) c.resolutions.push_back(size_value(item));
    } else if (key == "t_check") c.t_check = detail::parse_double(key, scalar());
    else if (key == "initial") c.initial = scalar();
    else if (key == "v0_cos") c.v0_cos = detail::parse_double_list(key, value);
    else if (key == "v0_sin") c.v0_sin = detail::parse_double_list(key, value);
    else if (key == "sigma0_cos") c.sigma0_cos = detail::parse_double_list(key, value);
    else if (key == "sigma0_sin") c.sigma0_sin = detail::parse_double_list(key, value);
    else if (key == "dealias") {
      const std::string v = scalar();
      if (v == "true") c.dealias = true;
      else if (v == "false") c.dealias = false;
      else throw ParseError(key, "expected true or false, got '" + v + "'");
    } else if (key == "blowup_threshold") c.blowup_threshold = detail::parse_double(key, scalar());
    else if (key == "blowup_threshold_factor") c.blowup_threshold_factor = detail::parse_double(key, scalar());
    else if (key == "blowup_t_max") c.blowup_t_max = detail::parse_double(key, scalar());
    else if (key == "label_refinement") c.label_refinement = size_value(scalar());
    else if (key == "tolerance") c.tolerance = detail::parse_double(key, scalar());
    else if (key == "output_dir") c.output_dir = scalar();
    else if (key == "seed") {
      const long long s = detail::parse_int(key, scalar());
      if (s < 0) throw ValidationError(key, "must be >= 0");
      c.seed = static_cast<std::uint64_t>(s);
    }
  }
  validate(c);
  return c;
}

/// Every key with its value, in parse_config's format. Parsing the result
/// reproduces c exactly.
inline std::string to_text(const RunConfig& c) {
  using detail::format_double;
  using detail::join;
  std::ostringstream o;
  o << "command = " << c.command << "\n"
    << "equation = " << c.equation << "\n"
    << "mkind = " << to_string(c.mkind) << "\n"
    << "b = " << format_double(c.b) << "\n"
    << "kappa = " << c.kappa << "\n"
    << "lambda = " << format_double(c.lambda) << "\n"
    << "n = " << c.n << "\n"
    << "L = " << format_double(c.L) << "\n"
    << "dt = " << format_double(c.dt) << "\n"
    << "t_end = " << format_double(c.t_end) << "\n"
    << "snapshot_times = " << join(c.snapshot_times) << "\n"
    << "check_times = " << join(c.check_times) << "\n"
    << "resolutions = " << join(c.resolutions) << "\n"
    << "t_check = " << format_double(c.t_check) << "\n"
    << "initial = " << c.initial << "\n"
    << "v0_cos = " << join(c.v0_cos) << "\n"
    << "v0_sin = " << join(c.v0_sin) << "\n"
    << "sigma0_cos = " << join(c.sigma0_cos) << "\n"
    << "sigma0_sin = " << join(c.sigma0_sin) << "\n"
    << "dealias = " << (c.dealias ? "true" : "false") << "\n"
    << "blowup_threshold = " << format_double(c.blowup_threshold) << "\n"
    << "blowup_threshold_factor = " << format_double(c.blowup_threshold_factor) << "\n"
    << "blowup_t_max = " << format_double(c.blowup_t_max) << "\n"
    << "label_refinement = " << c.label_refinement << "\n"
    << "tolerance = " << format_double(c.tolerance) << "\n"
    << "output_dir = " << c.output_dir << "\n"
    << "seed = " << c.seed << "\n";
  return o.str();
}

/// Equation described by a config.
inline EquationSpec equation_spec(const RunConfig& c) {
  if (c.equation == "novikov") return EquationSpec::novikov(c.lambda);
  if (c.equation == "chweak") return EquationSpec::ch_weak_form(c.lambda);
  return EquationSpec::bfamily(c.mkind, c.b, c.kappa, c.lambda);
}

/// Initial data described by a config.
inline InitialData initial_data(const RunConfig& c) {
  if (c.initial == "series") return {{c.v0_cos, c.v0_sin}, {c.sigma0_cos, c.sigma0_sin}};
  return presets::by_name(c.initial, c.seed);
}

/// True when the run carries a nonzero second component.
inline bool is_two_component(const RunConfig& c) {
  if (c.equation != "bfamily") return false;
  const InitialData d = initial_data(c);
  return d.sigma.highest_mode() > 0 || (!d.sigma.cos_coeffs.empty() && d.sigma.cos_coeffs[0] != 0.0);
}

} // namespace wdspec
