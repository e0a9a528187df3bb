#include "gtn/analysis.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <stdexcept>

namespace gtn {

namespace {

constexpr double kBracketLow = 1e-6;   // in units of omega
constexpr double kBracketHigh = 1e3;
constexpr double kBisectionWidth = 1e-9;
constexpr double kRouteAgreement = 1e-6;

void require_alpha_sq_open(double alpha_sq)
{
  detail::require(alpha_sq > 0.0 && alpha_sq < 1.0, "alpha^2 must lie in (0, 1)");
}

Relation equality(double lhs, double rhs, double tolerance)
{
  return {lhs, rhs, lhs - rhs, std::abs(lhs - rhs) <= tolerance};
}

}  // namespace

std::optional<double> critical_temperature_closed_form(double alpha_sq, double omega)
{
  require_alpha_sq_open(alpha_sq);
  detail::require(omega > 0.0, "frequency must be positive");
  const double k = 2.0 * std::sqrt(2.0 * alpha_sq * (1.0 - alpha_sq));
  if (k <= 1.0) return std::nullopt;
  return -omega / std::log(k - 1.0);
}

std::optional<CriticalTemperature> critical_temperature(double alpha_sq, double omega)
{
  const auto closed = critical_temperature_closed_form(alpha_sq, omega);

  auto excess = [&](double t) {
    return svetlichny_closed_form(ScenarioParams<double>::from_alpha_sq(alpha_sq, omega, t), ReducedStateId::A_BI_CI) -
           4.0;
  };
  const double lo = kBracketLow * omega, hi = kBracketHigh * omega;
  const double f_lo = excess(lo), f_hi = excess(hi);
  const bool straddles = f_lo > 0.0 && f_hi < 0.0;

  if (!closed && !straddles) return std::nullopt;
  if (closed.has_value() != straddles)
    throw std::runtime_error("critical temperature: closed form and bisection bracket disagree");

  auto width_ok = [](double a, double b) { return std::abs(b - a) <= kBisectionWidth; };
  const auto bracket = boost::math::tools::bisect(excess, lo, hi, width_ok);
  const double root = 0.5 * (bracket.first + bracket.second);
  if (std::abs(root - *closed) > kRouteAgreement)
    throw std::runtime_error("critical temperature: closed form and bisection differ by more than 1e-6");
  return CriticalTemperature{*closed, root};
}

double sudden_death_alpha_sq_threshold() { return (1.0 - 1.0 / std::sqrt(2.0)) / 2.0; }

MonogamyReport check_monogamy(const ScenarioParams<double>& params, double tolerance)
{
  const auto cat = measures_catalog(params);
  using R = ReducedStateId;
  const double a2 = params.alpha_sq, b2 = 1.0 - params.alpha_sq;
  const double c_acc = cat.tri(R::A_BI_CI).gte_generic;
  const double c_bi_cii = cat.tri(R::A_BI_CII).gte_generic;
  const double c_bii_ci = cat.tri(R::A_BII_CI).gte_generic;
  const double c_inacc = cat.tri(R::A_BII_CII).gte_generic;
  const double c_bb = cat.tri(R::A_BI_BII).gte_generic;
  const double c_cc = cat.tri(R::A_CI_CII).gte_generic;

  MonogamyReport r;
  r.gte_sum = equality(c_acc + c_inacc, 2.0 * std::sqrt(a2 * b2), tolerance);
  r.gte_square_sum = equality(c_acc * c_acc + c_bii_ci * c_bii_ci + c_bi_cii * c_bi_cii + c_inacc * c_inacc,
                              4.0 * a2 * b2, tolerance);
  const double weighted = a2 * (c_acc * c_acc + c_inacc * c_inacc) + b2 * (c_bb * c_bb + c_cc * c_cc);
  r.weighted_alpha2_rhs = equality(weighted, 4.0 * a2 * b2, tolerance);
  r.weighted_alpha4_rhs = equality(weighted, 4.0 * a2 * a2 * b2, tolerance);

  auto pair_c = [&](const std::string& x, const std::string& y) {
    for (auto id : kPairIds) {
      const auto& m = id_modes(id);
      if ((m[0] == x && m[1] == y) || (m[0] == y && m[1] == x)) return cat.pair(id).concurrence_generic;
    }
    throw std::logic_error("no pair reduction for the requested modes");
  };
  const std::array<std::array<std::string, 3>, 6> perms{{{"A", "B_I", "C_I"},
                                                         {"A", "C_I", "B_I"},
                                                         {"B_I", "A", "C_I"},
                                                         {"B_I", "C_I", "A"},
                                                         {"C_I", "A", "B_I"},
                                                         {"C_I", "B_I", "A"}}};
  for (std::size_t k = 0; k < perms.size(); ++k) {
    const auto& [i, j, l] = perms[k];
    const double cij = pair_c(i, j), cil = pair_c(i, l);
    Relation rel;
    rel.lhs = c_acc * c_acc;
    rel.rhs = cij * cij + cil * cil;
    rel.residual = rel.lhs - rel.rhs;
    rel.passed = rel.residual >= -tolerance;
    r.ckw[k] = rel;
    r.ckw_labels[k] = perms[k];
  }
  return r;
}

SweepRecord evaluate_point(const ScenarioParams<double>& params, const BruteForceOptions& brute)
{
  SweepRecord rec;
  rec.alpha_sq = params.alpha_sq;
  rec.omega = params.omega;
  rec.temperature = params.temperature;
  rec.catalog = measures_catalog(params);
  rec.monogamy = check_monogamy(params);
  if (brute.enabled) {
    std::array<double, kTripartiteIds.size()> values{};
    for (auto id : kTripartiteIds)
      values[tripartite_slot(id)] = svetlichny_bruteforce(reduced_state(params, id), brute.restarts, brute.seed).value;
    rec.svetlichny_bruteforce = values;
  }
  return rec;
}

std::vector<SweepRecord> sweep_temperature(double alpha_sq, double omega, std::span<const double> t_grid,
                                           const BruteForceOptions& brute)
{
  detail::require(!t_grid.empty(), "temperature grid is empty");
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    detail::require(t_grid[k] > 0.0, "temperatures must be positive");
    detail::require(k == 0 || t_grid[k] > t_grid[k - 1], "temperature grid must be strictly increasing");
  }
  std::vector<SweepRecord> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) out.push_back(evaluate_point(ScenarioParams<double>::from_alpha_sq(alpha_sq, omega, t), brute));
  return out;
}

std::vector<SweepRecord> sweep_alpha(double temperature, double omega, std::span<const double> alpha_sq_grid,
                                     const BruteForceOptions& brute)
{
  detail::require(!alpha_sq_grid.empty(), "alpha^2 grid is empty");
  for (double a2 : alpha_sq_grid) detail::require(a2 >= 0.0 && a2 <= 1.0, "alpha^2 grid must lie in [0, 1]");
  std::vector<SweepRecord> out;
  out.reserve(alpha_sq_grid.size());
  for (double a2 : alpha_sq_grid)
    out.push_back(evaluate_point(ScenarioParams<double>::from_alpha_sq(a2, omega, temperature), brute));
  return out;
}

std::vector<SuddenDeathPoint> sudden_death_scan(double omega, std::span<const double> alpha_sq_grid)
{
  detail::require(!alpha_sq_grid.empty(), "alpha^2 grid is empty");
  std::vector<SuddenDeathPoint> out;
  out.reserve(alpha_sq_grid.size());
  for (double a2 : alpha_sq_grid) {
    SuddenDeathPoint pt{a2, std::nullopt};
    if (const auto tc = critical_temperature(a2, omega)) pt.critical_temperature = tc->closed_form;
    out.push_back(pt);
  }
  return out;
}

std::vector<double> linear_grid(double first, double last, int count)
{
  detail::require(count >= 1, "grid needs at least one point");
  std::vector<double> g(static_cast<std::size_t>(count));
  if (count == 1) {
    g[0] = first;
    return g;
  }
  for (int k = 0; k < count; ++k) g[static_cast<std::size_t>(k)] = first + (last - first) * k / (count - 1);
  g.back() = last;
  return g;
}

std::vector<double> log_grid(double first, double last, int count)
{
  detail::require(first > 0.0 && last > 0.0, "log grid needs positive end points");
  auto g = linear_grid(std::log(first), std::log(last), count);
  for (auto& v : g) v = std::exp(v);
  g.front() = first;
  if (count > 1) g.back() = last;
  return g;
}

MonotonicityReport check_monotone(std::span<const double> values, Direction direction,
                                  std::optional<double> saturated_limit)
{
  MonotonicityReport r;
  if (saturated_limit)
    while (r.plateau < values.size() && values[r.plateau] == *saturated_limit) ++r.plateau;
  for (std::size_t k = 1; k < values.size(); ++k) {
    const double step = direction == Direction::Increasing ? values[k] - values[k - 1] : values[k - 1] - values[k];
    const bool in_plateau = k < r.plateau;
    if (step < 0.0 || (!in_plateau && step == 0.0)) ++r.violations;
  }
  r.ok = r.violations == 0;
  return r;
}

std::size_t count_crossings(std::span<const double> values, double level)
{
  std::size_t crossings = 0;
  int last_sign = 0;
  for (double v : values) {
    const int sign = v > level ? 1 : (v < level ? -1 : 0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) ++crossings;
    last_sign = sign;
  }
  return crossings;
}

}  // namespace gtn
