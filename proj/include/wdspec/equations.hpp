#pragma once

// Right-hand sides of the weakly dissipative b-family (three momentum
// kinds, two components), the Novikov equation in momentum form, and the
// nonlocal transport form of Camassa-Holm used for cross-validation.

#include <cmath>
#include <string>
#include <type_traits>
#include <variant>

#include "grid.hpp"
#include "spectral.hpp"

namespace wdspec {

/// How momentum is built from velocity.
enum class MKind {
  Helmholtz,     ///< m = v - v_xx
  NegLaplacian,  ///< m = -v_xx (Hunter-Saxton)
  MuHelmholtz,   ///< m = mean(v) - v_xx
};

inline const char* to_string(MKind k) {
  switch (k) {
    case MKind::Helmholtz: return "helmholtz";
    case MKind::NegLaplacian: return "neglaplacian";
    case MKind::MuHelmholtz: return "muhelmholtz";
  }
  return "?";
}

struct BFamily {
  MKind mkind = MKind::Helmholtz;
  double b = 2.0;
  int kappa = 1;
  friend bool operator==(const BFamily&, const BFamily&) = default;
};
struct Novikov {
  friend bool operator==(const Novikov&, const Novikov&) = default;
};
struct CHWeakForm {
  friend bool operator==(const CHWeakForm&, const CHWeakForm&) = default;
};

using Family = std::variant<BFamily, Novikov, CHWeakForm>;

/// PDE family plus dissipation rate. lambda = 0 is the non-dissipative system.
struct EquationSpec {
  Family family = BFamily{};
  double lambda = 0.0;

  static EquationSpec bfamily(MKind mkind, double b, int kappa, double lambda) {
    EquationSpec s{BFamily{mkind, b, kappa}, lambda};
    s.validate();
    return s;
  }
  static EquationSpec camassa_holm(double lambda) {
    return bfamily(MKind::Helmholtz, 2.0, 1, lambda);
  }
  static EquationSpec novikov(double lambda) {
    EquationSpec s{Novikov{}, lambda};
    s.validate();
    return s;
  }
  static EquationSpec ch_weak_form(double lambda) {
    EquationSpec s{CHWeakForm{}, lambda};
    s.validate();
    return s;
  }

  EquationSpec with_lambda(double l) const {
    EquationSpec s = *this;
    s.lambda = l;
    s.validate();
    return s;
  }

  void validate() const {
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
      throw InvalidData("dissipation rate lambda must be finite and >= 0");
    if (const auto* bf = std::get_if<BFamily>(&family)) {
      if (bf->kappa != 1 && bf->kappa != -1) throw InvalidData("kappa must be +1 or -1");
      if (!std::isfinite(bf->b)) throw InvalidData("b must be finite");
    }
  }

  bool is_bfamily() const { return std::holds_alternative<BFamily>(family); }
  bool is_novikov() const { return std::holds_alternative<Novikov>(family); }
  bool is_ch_weak_form() const { return std::holds_alternative<CHWeakForm>(family); }

  /// Order p of the matching time map: 2 for Novikov (cubic), 1 otherwise.
  int time_map_order() const { return is_novikov() ? 2 : 1; }

  std::string name() const {
    if (is_bfamily()) return "bfamily";
    return is_novikov() ? "novikov" : "chweak";
  }

  friend bool operator==(const EquationSpec&, const EquationSpec&) = default;
};

/// Prognostic variables. For the b-family m is the momentum; for Novikov it
/// holds n = v - v_xx; for the weak CH form it holds v itself. sigma is
/// identically zero for single-component families.
struct TwoComponentState {
  Field m;
  Field sigma;

  const PeriodicGrid& grid() const { return m.grid(); }

  bool all_finite() const { return m.all_finite() && sigma.all_finite(); }

  TwoComponentState& operator+=(const TwoComponentState& o) {
    m += o.m;
    sigma += o.sigma;
    return *this;
  }
  TwoComponentState& operator*=(double s) {
    m *= s;
    sigma *= s;
    return *this;
  }
  friend TwoComponentState operator+(TwoComponentState a, const TwoComponentState& b) { return a += b; }
  friend TwoComponentState operator*(TwoComponentState a, double s) { return a *= s; }
  friend TwoComponentState operator*(double s, TwoComponentState a) { return a *= s; }
  friend bool operator==(const TwoComponentState&, const TwoComponentState&) = default;
};

inline Field maybe_dealias(const Field& f, bool enabled) { return enabled ? dealias(f) : f; }

/// Inverts the momentum relation of the given kind. gauge_mean only matters
/// for NegLaplacian, whose inverse is defined up to a constant.
inline Field recover_velocity(const Field& m, MKind kind, double gauge_mean = 0.0) {
  switch (kind) {
    case MKind::Helmholtz: return helmholtz_inverse(m);
    case MKind::MuHelmholtz: return mu_helmholtz_inverse(m);
    case MKind::NegLaplacian: return neg_laplacian_inverse(m, gauge_mean);
  }
  throw InvalidData("unknown momentum kind");
}

inline Field momentum_from_velocity(const Field& v, MKind kind) {
  switch (kind) {
    case MKind::Helmholtz: return helmholtz_apply(v);
    case MKind::MuHelmholtz: return mu_helmholtz_apply(v);
    case MKind::NegLaplacian: return neg_laplacian_apply(v);
  }
  throw InvalidData("unknown momentum kind");
}

/// Velocity carried by a state of the given equation.
inline Field velocity(const TwoComponentState& s, const EquationSpec& spec, double gauge_mean = 0.0) {
  if (const auto* bf = std::get_if<BFamily>(&spec.family))
    return recover_velocity(s.m, bf->mkind, gauge_mean);
  if (spec.is_novikov()) return helmholtz_inverse(s.m);
  return s.m;
}

/// Builds the prognostic state from velocity and second component.
inline TwoComponentState make_state(const Field& v0, const Field& sigma0, const EquationSpec& spec) {
  if (const auto* bf = std::get_if<BFamily>(&spec.family))
    return {momentum_from_velocity(v0, bf->mkind), sigma0};
  const Field zero(v0.grid());
  if (spec.is_novikov()) return {helmholtz_apply(v0), zero};
  return {v0, zero};
}

inline TwoComponentState make_state(const Field& v0, const EquationSpec& spec) {
  return make_state(v0, Field(v0.grid()), spec);
}

/// m_t = -(v m_x + b v_x m + kappa sigma sigma_x) - lambda m,
/// sigma_t = -(v sigma)_x - lambda sigma.
inline TwoComponentState rhs_bfamily(const TwoComponentState& state, const EquationSpec& spec,
                                     double gauge_mean = 0.0, bool dealias_products = true) {
  const auto* bf = std::get_if<BFamily>(&spec.family);
  if (!bf) throw InvalidData("rhs_bfamily called with a non b-family equation");
  const Field& m = state.m;
  const Field& sigma = state.sigma;
  const Field v = recover_velocity(m, bf->mkind, gauge_mean);
  const Field vx = spectral_derivative(v, 1);
  const Field mx = spectral_derivative(m, 1);
  const Field sx = spectral_derivative(sigma, 1);

  Field products(m.grid());
  for (std::size_t j = 0; j < m.size(); ++j)
    products[j] = v[j] * mx[j] + bf->b * vx[j] * m[j] + bf->kappa * sigma[j] * sx[j];
  const Field nonlinear_m = maybe_dealias(products, dealias_products);
  const Field nonlinear_s = spectral_derivative(maybe_dealias(hadamard(v, sigma), dealias_products), 1);

  const double lambda = spec.lambda;
  TwoComponentState out{Field(m.grid()), Field(m.grid())};
  for (std::size_t j = 0; j < m.size(); ++j) {
    out.m[j] = -nonlinear_m[j] - lambda * m[j];
    out.sigma[j] = -nonlinear_s[j] - lambda * sigma[j];
  }
  return out;
}

/// Novikov in momentum form: n_t = -(v^2 n_x + 3 v v_x n) - lambda n,
/// n = v - v_xx. The sigma slot is returned as zero.
inline TwoComponentState rhs_novikov(const TwoComponentState& state, double lambda,
                                     bool dealias_products = true) {
  const Field& n = state.m;
  const Field v = helmholtz_inverse(n);
  const Field vx = spectral_derivative(v, 1);
  const Field nx = spectral_derivative(n, 1);
  Field products(n.grid());
  for (std::size_t j = 0; j < n.size(); ++j)
    products[j] = v[j] * v[j] * nx[j] + 3.0 * v[j] * vx[j] * n[j];
  const Field nonlinear = maybe_dealias(products, dealias_products);
  TwoComponentState out{Field(n.grid()), Field(n.grid())};
  for (std::size_t j = 0; j < n.size(); ++j) out.m[j] = -nonlinear[j] - lambda * n[j];
  return out;
}

/// v_t = -(v v_x + d/dx (1 - d^2/dx^2)^{-1} (v^2 + v_x^2 / 2)) - lambda v.
inline Field rhs_ch_weakform(const Field& v, double lambda, bool dealias_products = true) {
  const Field vx = spectral_derivative(v, 1);
  Field transport(v.grid());
  Field source(v.grid());
  for (std::size_t j = 0; j < v.size(); ++j) {
    transport[j] = v[j] * vx[j];
    source[j] = v[j] * v[j] + 0.5 * vx[j] * vx[j];
  }
  const Field t = maybe_dealias(transport, dealias_products);
  const Field p = spectral_derivative(helmholtz_inverse(maybe_dealias(source, dealias_products)), 1);
  Field out(v.grid());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = -(t[j] + p[j]) - lambda * v[j];
  return out;
}

/// Dispatches to the right-hand side of spec's family.
inline TwoComponentState rhs(const TwoComponentState& state, const EquationSpec& spec,
                             double gauge_mean = 0.0, bool dealias_products = true) {
  if (spec.is_bfamily()) return rhs_bfamily(state, spec, gauge_mean, dealias_products);
  if (spec.is_novikov()) return rhs_novikov(state, spec.lambda, dealias_products);
  return {rhs_ch_weakform(state.m, spec.lambda, dealias_products), Field(state.grid())};
}

} // namespace wdspec
