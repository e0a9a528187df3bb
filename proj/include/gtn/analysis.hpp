#pragma once

#include "gtn/schwarzschild_modes.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gtn {

struct CriticalTemperature {
  double closed_form = 0.0;
  double bisection = 0.0;
};

/// Temperature at which S(rho_{A B_I C_I}) falls to 4, from
/// T_c = -omega / ln(2 alpha sqrt(2 (1 - alpha^2)) - 1) and independently by
/// bisection of the closed-form Svetlichny value on [1e-6 omega, 1e3 omega].
/// Absent when 8 alpha^2 (1 - alpha^2) <= 1: the state never violates the
/// Svetlichny inequality. Throws if the two routes disagree by more than 1e-6.
std::optional<CriticalTemperature> critical_temperature(double alpha_sq, double omega);

/// Closed-form route only; absent under the same condition.
std::optional<double> critical_temperature_closed_form(double alpha_sq, double omega);

struct BruteForceOptions {
  bool enabled = false;
  int restarts = 64;
  std::uint64_t seed = 0;
};

struct Relation {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // lhs - rhs
  bool passed = false;
};

struct MonogamyReport {
  // C(A B_I C_I) + C(A B_II C_II) = 2 alpha sqrt(1 - alpha^2)
  Relation gte_sum;
  // C(A B_I C_I)^2 + C(A B_II C_I)^2 + C(A B_I C_II)^2 + C(A B_II C_II)^2 = 4 alpha^2 (1 - alpha^2)
  Relation gte_square_sum;
  // alpha^2 [C(A B_I C_I)^2 + C(A B_II C_II)^2] + (1 - alpha^2)[C(A B_I B_II)^2 + C(A C_I C_II)^2]
  // compared with 4 alpha^2 (1 - alpha^2) and with 4 alpha^4 (1 - alpha^2)
  Relation weighted_alpha2_rhs;
  Relation weighted_alpha4_rhs;
  // C(ijk)^2 >= C(ij)^2 + C(ik)^2 over the permutations (i, j, k) of (A, B_I, C_I);
  // residual = lhs - rhs must be >= -tolerance
  std::array<Relation, 6> ckw{};
  std::array<std::array<std::string, 3>, 6> ckw_labels{};

  bool weighted_alpha2_mismatch() const { return !weighted_alpha2_rhs.passed; }
};

MonogamyReport check_monogamy(const ScenarioParams<double>& params, double tolerance = 1e-12);

struct SweepRecord {
  double alpha_sq = 0.0;
  double omega = 0.0;
  double temperature = 0.0;
  MeasuresCatalog catalog;
  MonogamyReport monogamy;
  // brute-force Svetlichny values in kTripartiteIds order, when requested
  std::optional<std::array<double, kTripartiteIds.size()>> svetlichny_bruteforce;
};

SweepRecord evaluate_point(const ScenarioParams<double>& params, const BruteForceOptions& brute = {});

/// One record per grid point, in grid order. The grid must be non-empty,
/// positive and strictly increasing.
std::vector<SweepRecord> sweep_temperature(double alpha_sq, double omega, std::span<const double> t_grid,
                                           const BruteForceOptions& brute = {});

/// One record per alpha^2 point; the grid must lie in [0, 1].
std::vector<SweepRecord> sweep_alpha(double temperature, double omega, std::span<const double> alpha_sq_grid,
                                     const BruteForceOptions& brute = {});

struct SuddenDeathPoint {
  double alpha_sq = 0.0;
  std::optional<double> critical_temperature;
};

/// critical_temperature() over a grid of alpha^2 values in (0, 1).
std::vector<SuddenDeathPoint> sudden_death_scan(double omega, std::span<const double> alpha_sq_grid);

/// alpha^2 below which no finite-temperature Svetlichny violation exists: 8 a (1 - a) = 1.
double sudden_death_alpha_sq_threshold();

std::vector<double> linear_grid(double first, double last, int count);
std::vector<double> log_grid(double first, double last, int count);

enum class Direction { Increasing, Decreasing };

/// Strict monotonicity up to double saturation: no step may go the wrong way,
/// and every step after the leading run of values equal to `saturated_limit`
/// must move strictly.
struct MonotonicityReport {
  bool ok = false;
  std::size_t plateau = 0;     // leading points equal to the limit
  std::size_t violations = 0;  // offending steps
};

MonotonicityReport check_monotone(std::span<const double> values, Direction direction,
                                  std::optional<double> saturated_limit = std::nullopt);

/// Count of sign changes of (value - level) along a sequence; exact zeros are skipped.
std::size_t count_crossings(std::span<const double> values, double level);

}  // namespace gtn
