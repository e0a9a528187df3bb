#pragma once

#include "gtn/analysis.hpp"

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace gtn::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIoError = 2, kVerifyFailed = 3 };

inline constexpr int kDefaultRestarts = 64;
inline constexpr const char* kRestartsEnv = "GTN_RESTARTS";

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Numbers in every CSV: printf "%.9g" in the C locale.
std::string format_number(double value);

/// Column order of the sweep CSV:
///   temperature, alpha_sq, omega,
///   S_<id>, C_<id> for each three-mode reduction,
///   B_<id>, C_<id> for each two-mode reduction,
///   B_BI_BII_literal,
///   mono_sum_residual, mono_square_sum_residual,
///   mono_weighted_4a2_residual, mono_weighted_4a4_residual,
///   ckw_<i>_<j>_<k> residual for each permutation of (A, BI, CI),
///   SBF_<id> brute-force Svetlichny values when requested.
std::vector<std::string> sweep_columns(bool with_bruteforce);

std::vector<double> sweep_row(const SweepRecord& record, bool with_bruteforce);

/// Header comment (when given), header row, one row per record.
void write_csv(std::ostream& out, std::span<const std::string> columns, std::span<const std::vector<double>> rows,
               const std::optional<std::string>& comment = std::nullopt);

}  // namespace gtn::cli
