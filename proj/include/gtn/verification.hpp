#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gtn {

enum class CheckKind { Check, Info };

struct CheckResult {
  std::string name;
  CheckKind kind = CheckKind::Check;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  std::string detail;
};

struct VerifyOptions {
  int restarts = 64;
  std::uint64_t seed = 0;
  // replaces every tolerance when set; used to exercise the failure path
  std::optional<double> tolerance_override;
};

/// Oracle-equivalence, monogamy, bound, symmetry and limit checks over the
/// standard parameter grids. Info records are reported but never fail.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

void write_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace gtn
