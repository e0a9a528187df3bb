#pragma once

// GHZ-like Dirac-field state shared by a Kruskal observer A and two
// Schwarzschild observers B, C near the horizon. Each of B and C splits into
// an exterior mode (I) and an interior mode (II); the thermal Bogoliubov
// weights p = cos^2(eta), q = sin^2(eta) are set by the Hawking temperature.

#include "gtn/correlation_measures.hpp"
#include "gtn/quantum_core.hpp"

#include <array>
#include <numbers>
#include <optional>
#include <string_view>

namespace gtn {

/// T = 1 / (8 pi M) in natural units.
double hawking_temperature(double mass);

template <typename Real>
struct ModeAmplitudes {
  Real omega;
  Real temperature;
  Real cos_eta;  // (1 + e^{-omega/T})^{-1/2}
  Real sin_eta;  // (1 + e^{+omega/T})^{-1/2}
};

/// Thermal populations of the Kruskal vacuum: p = cos^2 eta, q = sin^2 eta,
/// and sqrt(p q). Evaluated without overflow for any omega/T, with the
/// analytic limit p = 1, q = 0 at T = 0.
template <typename Real>
struct ThermalWeights {
  Real p;
  Real q;
  Real sqrt_pq;
};

template <typename Real>
ThermalWeights<Real> thermal_weights(Real omega, Real temperature)
{
  detail::require(omega > Real(0), "frequency must be positive");
  detail::require(temperature >= Real(0), "temperature must be non-negative");
  if (temperature == Real(0)) return {Real(1), Real(0), Real(0)};
  const Real x = omega / temperature;
  const Real e = std::exp(-x);
  const Real denom = Real(1) + e;
  return {Real(1) / denom, e / denom, std::exp(-x / Real(2)) / denom};
}

template <typename Real>
ModeAmplitudes<Real> mode_amplitudes(Real omega, Real temperature)
{
  detail::require(omega > Real(0), "frequency must be positive");
  detail::require(temperature > Real(0), "temperature must be positive");
  const Real x = omega / temperature;
  const Real e = std::exp(-x);
  const Real root = std::sqrt(Real(1) + e);
  return {omega, temperature, Real(1) / root, std::exp(-x / Real(2)) / root};
}

/// Initial-state parameter (stored as alpha^2), frequency and Hawking temperature.
template <typename Real>
struct ScenarioParams {
  Real alpha_sq = Real(0.5);
  Real omega = Real(1);
  Real temperature = Real(1);

  static ScenarioParams from_alpha(Real alpha, Real omega, Real temperature)
  {
    detail::require(alpha >= Real(0) && alpha <= Real(1), "alpha must lie in [0, 1]");
    return ScenarioParams{alpha * alpha, omega, temperature}.checked();
  }

  static ScenarioParams from_alpha_sq(Real alpha_sq, Real omega, Real temperature)
  {
    return ScenarioParams{alpha_sq, omega, temperature}.checked();
  }

  static ScenarioParams from_mass(Real alpha, Real omega, Real mass)
  {
    return from_alpha(alpha, omega, Real(hawking_temperature(static_cast<double>(mass))));
  }

  ScenarioParams checked() const
  {
    detail::require(alpha_sq >= Real(0) && alpha_sq <= Real(1), "alpha^2 must lie in [0, 1]");
    detail::require(omega > Real(0), "frequency must be positive");
    detail::require(temperature >= Real(0), "temperature must be non-negative");
    return *this;
  }

  Real alpha() const { return std::sqrt(alpha_sq); }
  Real beta() const { return std::sqrt(Real(1) - alpha_sq); }
  ThermalWeights<Real> weights() const { return thermal_weights(omega, temperature); }

  template <typename Other>
  ScenarioParams<Other> cast() const
  {
    return {Other(alpha_sq), Other(omega), Other(temperature)};
  }
};

enum class ReducedStateId {
  // three-mode reductions
  A_BI_CI,
  A_BI_CII,
  A_BII_CI,
  A_BII_CII,
  A_BI_BII,
  A_CI_CII,
  // two-mode reductions
  BI_BII,
  CI_CII,
  A_BI,
  A_CI,
  BI_CI,
  BII_CII,
  A_BII,
  A_CII,
  BI_CII,
  BII_CI,
};

inline constexpr std::array<ReducedStateId, 6> kTripartiteIds{
    ReducedStateId::A_BI_CI,  ReducedStateId::A_BI_CII, ReducedStateId::A_BII_CI,
    ReducedStateId::A_BII_CII, ReducedStateId::A_BI_BII, ReducedStateId::A_CI_CII};

inline constexpr std::array<ReducedStateId, 10> kPairIds{
    ReducedStateId::BI_BII, ReducedStateId::CI_CII, ReducedStateId::A_BI,   ReducedStateId::A_CI,
    ReducedStateId::BI_CI,  ReducedStateId::BII_CII, ReducedStateId::A_BII, ReducedStateId::A_CII,
    ReducedStateId::BI_CII, ReducedStateId::BII_CI};

/// Three-mode reductions that involve at least one interior mode.
inline constexpr std::array<ReducedStateId, 5> kInaccessibleTripartiteIds{
    ReducedStateId::A_BI_CII, ReducedStateId::A_BII_CI, ReducedStateId::A_BII_CII,
    ReducedStateId::A_BI_BII, ReducedStateId::A_CI_CII};

/// Mode order of the full state.
const ModeList& five_mode_labels();

std::string_view id_name(ReducedStateId id);
std::optional<ReducedStateId> id_from_name(std::string_view name);
const ModeList& id_modes(ReducedStateId id);
bool is_tripartite(ReducedStateId id);
std::size_t tripartite_slot(ReducedStateId id);
std::size_t pair_slot(ReducedStateId id);

/// Basis ordering in which closed_form_elements() is written: the reordered
/// basis |000>,|100>,|010>,|001>,|101>,|111>,|110>,|011> for A_BI_BII and
/// A_CI_CII (where the state takes X form), the standard ordering otherwise.
BasisOrder closed_form_basis_order(ReducedStateId id);

/// The five-mode state over (A, B_I, B_II, C_I, C_II).
template <typename Real>
StateVector<Real> build_state(const ScenarioParams<Real>& params)
{
  params.checked();
  const auto w = params.weights();
  const Real a = params.alpha(), b = params.beta();
  CVector<Real> amps = CVector<Real>::Zero(32);
  amps(basis_index("00000")) = a * w.p;
  amps(basis_index("00011")) = a * w.sqrt_pq;
  amps(basis_index("01100")) = a * w.sqrt_pq;
  amps(basis_index("01111")) = a * w.q;
  amps(basis_index("11010")) = b;
  return StateVector<Real>(five_mode_labels(), std::move(amps));
}

template <typename Real>
DensityOperator<Real> reduced_state(const ScenarioParams<Real>& params, ReducedStateId id)
{
  const auto rho = density_from_pure(build_state(params));
  return partial_trace(rho, std::span<const std::string>(id_modes(id)));
}

/// Closed-form matrix elements of each reduction, in the ordering given by
/// closed_form_basis_order(id) and the mode order of id_modes(id).
template <typename Real>
CMatrix<Real> closed_form_elements(const ScenarioParams<Real>& params, ReducedStateId id)
{
  params.checked();
  const auto w = params.weights();
  const Real a2 = params.alpha_sq, b2 = Real(1) - params.alpha_sq;
  const Real ab = params.alpha() * params.beta();
  const Real p = w.p, q = w.q, s = w.sqrt_pq;

  auto x3 = [&](int slot, Real coherence) {
    XStateParams3<Real> x;
    x.n = {a2 * p * p, a2 * p * q, a2 * p * q, a2 * q * q};
    x.m[static_cast<std::size_t>(slot)] = b2;
    x.c[static_cast<std::size_t>(slot)] = coherence;
    return to_matrix(x);
  };
  auto diag = [](Real d0, Real d1, Real d2, Real d3) {
    XStateParams2<Real> x;
    x.rho11 = d0;
    x.rho22 = d1;
    x.rho33 = d2;
    x.rho44 = d3;
    return to_matrix(x);
  };

  switch (id) {
    case ReducedStateId::A_BI_CI: return x3(0, ab * p);
    case ReducedStateId::A_BI_CII: return x3(1, ab * s);
    case ReducedStateId::A_BII_CI: return x3(2, ab * s);
    case ReducedStateId::A_BII_CII: return x3(3, ab * q);
    case ReducedStateId::A_BI_BII:
    case ReducedStateId::A_CI_CII: {
      XStateParams3<Real> x;
      x.n[0] = a2 * p;
      x.m[0] = a2 * q;
      x.m[1] = b2;
      x.c[0] = a2 * s;
      return to_matrix(x);
    }
    case ReducedStateId::BI_BII:
    case ReducedStateId::CI_CII: {
      XStateParams2<Real> x;
      x.rho11 = a2 * p;
      x.rho33 = b2;
      x.rho44 = a2 * q;
      x.rho14 = a2 * s;
      return to_matrix(x);
    }
    case ReducedStateId::A_BI:
    case ReducedStateId::A_CI: return diag(a2 * p, a2 * q, Real(0), b2);
    case ReducedStateId::BI_CI: return diag(a2 * p * p, a2 * p * q, a2 * p * q, a2 * q * q + b2);
    case ReducedStateId::BII_CII: return diag(a2 * p * p + b2, a2 * p * q, a2 * p * q, a2 * q * q);
    case ReducedStateId::A_BII:
    case ReducedStateId::A_CII: return diag(a2 * p, a2 * q, b2, Real(0));
    case ReducedStateId::BI_CII: return diag(a2 * p * p, a2 * p * q, a2 * p * q + b2, a2 * q * q);
    case ReducedStateId::BII_CI: return diag(a2 * p * p, a2 * p * q + b2, a2 * p * q, a2 * q * q);
  }
  throw std::invalid_argument("unknown reduced state id");
}

/// Closed-form Svetlichny value of a three-mode reduction.
template <typename Real>
Real svetlichny_closed_form(const ScenarioParams<Real>& params, ReducedStateId id)
{
  params.checked();
  const auto w = params.weights();
  const Real a2 = params.alpha_sq;
  const Real ab = params.alpha() * params.beta();
  const Real sqrt2 = std::sqrt(Real(2));
  const Real dpq = (w.p - w.q) * (w.p - w.q);
  switch (id) {
    case ReducedStateId::A_BI_CI:
      return std::max(Real(8) * sqrt2 * ab * w.p, Real(4) * std::abs(a2 * dpq + a2 - Real(1)));
    case ReducedStateId::A_BI_CII:
    case ReducedStateId::A_BII_CI:
      return std::max(Real(8) * sqrt2 * ab * w.sqrt_pq, Real(4) * std::abs(a2 * dpq - a2 + Real(1)));
    case ReducedStateId::A_BII_CII:
      return std::max(Real(8) * sqrt2 * ab * w.q, Real(4) * std::abs(a2 * dpq + a2 - Real(1)));
    case ReducedStateId::A_BI_BII:
    case ReducedStateId::A_CI_CII:
      return std::max(Real(8) * sqrt2 * a2 * w.sqrt_pq, Real(4) * std::abs(Real(1) - Real(2) * a2 * w.q));
    default: throw std::invalid_argument("Svetlichny closed form needs a three-mode reduction");
  }
}

/// Closed-form genuine tripartite concurrence of a three-mode reduction.
template <typename Real>
Real gte_closed_form(const ScenarioParams<Real>& params, ReducedStateId id)
{
  params.checked();
  const auto w = params.weights();
  const Real ab = params.alpha() * params.beta();
  switch (id) {
    case ReducedStateId::A_BI_CI: return Real(2) * ab * w.p;
    case ReducedStateId::A_BI_CII:
    case ReducedStateId::A_BII_CI: return Real(2) * ab * w.sqrt_pq;
    case ReducedStateId::A_BII_CII: return Real(2) * ab * w.q;
    case ReducedStateId::A_BI_BII:
    case ReducedStateId::A_CI_CII: return Real(2) * params.alpha_sq * w.sqrt_pq;
    default: throw std::invalid_argument("tripartite concurrence needs a three-mode reduction");
  }
}

/// Maximal Bell signal of a two-mode reduction from its closed-form elements.
template <typename Real>
Real bell_closed_form(const ScenarioParams<Real>& params, ReducedStateId id)
{
  detail::require(!is_tripartite(id), "Bell signal needs a two-mode reduction");
  return chsh_xstate(x_params2_from_matrix<Real>(closed_form_elements(params, id)));
}

/// Closed-form two-mode concurrence: only the B_I B_II and C_I C_II pairs are entangled.
template <typename Real>
Real pair_concurrence_closed_form(const ScenarioParams<Real>& params, ReducedStateId id)
{
  detail::require(!is_tripartite(id), "pair concurrence needs a two-mode reduction");
  if (id == ReducedStateId::BI_BII || id == ReducedStateId::CI_CII)
    return std::max(Real(0), Real(2) * params.alpha_sq * params.weights().sqrt_pq);
  return Real(0);
}

/// The B_I B_II Bell signal with its second branch written as
/// 2 sqrt((2 alpha^2 - 1)^2 + 4 alpha^2 sqrt(pq)). This differs from the
/// eigenvalue route, which gives 4 alpha^4 pq in place of 4 alpha^2 sqrt(pq);
/// it is kept for comparison only.
template <typename Real>
Real bell_bi_bii_literal(const ScenarioParams<Real>& params)
{
  const auto w = params.weights();
  const Real a2 = params.alpha_sq;
  const Real first = Real(4) * std::sqrt(Real(2)) * a2 * w.sqrt_pq;
  const Real d = Real(2) * a2 - Real(1);
  return std::max(first, Real(2) * std::sqrt(d * d + Real(4) * a2 * w.sqrt_pq));
}

/// 4 - S for the closed-form Svetlichny value, written without cancellation
/// so that its sign is resolved even when S rounds to 4.
template <typename Real>
Real svetlichny_deficit(const ScenarioParams<Real>& params, ReducedStateId id)
{
  params.checked();
  const auto w = params.weights();
  const Real a2 = params.alpha_sq, b2 = Real(1) - params.alpha_sq;
  const Real ab = params.alpha() * params.beta();
  const Real pq = w.sqrt_pq * w.sqrt_pq;
  const Real eight_sqrt2 = Real(8) * std::sqrt(Real(2));

  // N = 2 a^2 - 1 - 4 a^2 pq for both of these
  auto balance_deficit_outer = [&]() {
    const Real n = Real(2) * a2 - Real(1) - Real(4) * a2 * pq;
    return n >= Real(0) ? Real(8) * b2 + Real(16) * a2 * pq : Real(8) * a2 * (Real(1) - Real(2) * pq);
  };

  switch (id) {
    case ReducedStateId::A_BI_CI:
      return std::min(Real(4) - eight_sqrt2 * ab * w.p, balance_deficit_outer());
    case ReducedStateId::A_BII_CII:
      return std::min(Real(4) - eight_sqrt2 * ab * w.q, balance_deficit_outer());
    case ReducedStateId::A_BI_CII:
    case ReducedStateId::A_BII_CI:
      return std::min(Real(4) - eight_sqrt2 * ab * w.sqrt_pq, Real(16) * a2 * pq);
    case ReducedStateId::A_BI_BII:
    case ReducedStateId::A_CI_CII:
      return std::min(Real(4) - eight_sqrt2 * a2 * w.sqrt_pq, Real(8) * a2 * w.q);
    default: throw std::invalid_argument("Svetlichny deficit needs a three-mode reduction");
  }
}

/// 2 - B for the closed-form Bell signal of a two-mode reduction, written
/// without cancellation.
template <typename Real>
Real bell_deficit(const ScenarioParams<Real>& params, ReducedStateId id)
{
  params.checked();
  const auto w = params.weights();
  const Real a2 = params.alpha_sq, b2 = Real(1) - params.alpha_sq;
  const Real p = w.p, q = w.q;
  const Real pq = w.sqrt_pq * w.sqrt_pq;
  switch (id) {
    case ReducedStateId::A_BI:
    case ReducedStateId::A_CI: return Real(4) * a2 * q;
    case ReducedStateId::BI_CI:
    case ReducedStateId::BII_CII: return Real(8) * a2 * pq;
    case ReducedStateId::A_BII:
    case ReducedStateId::A_CII: {
      const Real t = Real(2) * a2 * p - Real(1);
      return t >= Real(0) ? Real(4) * b2 + Real(4) * a2 * q : Real(4) * a2 * p;
    }
    case ReducedStateId::BI_CII:
    case ReducedStateId::BII_CI: {
      const Real t = Real(2) * a2 - Real(1) - Real(4) * a2 * pq;
      return t >= Real(0) ? Real(4) * b2 + Real(8) * a2 * pq : Real(4) * a2 * (Real(1) - Real(2) * pq);
    }
    case ReducedStateId::BI_BII:
    case ReducedStateId::CI_CII: {
      // 4 - B^2 = 4 min(1 - 8 a^4 pq, 4 a^2 (1 - a^2 - a^2 pq))
      const Real a4pq = a2 * a2 * pq;
      const Real slack = std::min(Real(1) - Real(8) * a4pq, Real(4) * a2 * (b2 - a2 * pq));
      const Real bell = bell_closed_form(params, id);
      return Real(4) * slack / (Real(2) + bell);
    }
    default: throw std::invalid_argument("Bell deficit needs a two-mode reduction");
  }
}

struct TripartiteMeasures {
  double svetlichny_closed = 0.0;
  double svetlichny_generic = 0.0;  // X-state formula on the partial-trace matrix
  double gte_closed = 0.0;
  double gte_generic = 0.0;
};

struct PairMeasures {
  double bell_closed = 0.0;
  double bell_generic = 0.0;  // correlation-matrix eigenvalues of the partial-trace matrix
  double concurrence_closed = 0.0;
  double concurrence_generic = 0.0;
};

/// Every closed-form measure for one parameter point, alongside the same
/// quantity recomputed from the partial-trace matrices.
struct MeasuresCatalog {
  ScenarioParams<double> params;
  std::array<TripartiteMeasures, kTripartiteIds.size()> tripartite{};
  std::array<PairMeasures, kPairIds.size()> pairs{};
  double bell_bi_bii_literal = 0.0;

  const TripartiteMeasures& tri(ReducedStateId id) const { return tripartite[tripartite_slot(id)]; }
  const PairMeasures& pair(ReducedStateId id) const { return pairs[pair_slot(id)]; }
};

MeasuresCatalog measures_catalog(const ScenarioParams<double>& params);

}  // namespace gtn
