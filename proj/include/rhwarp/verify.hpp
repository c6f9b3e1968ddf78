#pragma once

// Named invariant checks across all modules, as run by `rhwarp verify`.

#include <string>
#include <vector>

namespace rhwarp {

enum class Compare { le, lt, ge, gt, eq };

struct CheckResult {
  std::string name;  // "<module>.<check>"
  double value = 0.0;
  Compare cmp = Compare::le;
  double limit = 0.0;
  bool pass = false;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// Substring matched against check names; empty runs everything.
  std::string filter;
  /// Name of a check whose primary input gets perturbed by 1e-3.
  std::string inject;
};

std::vector<std::string> check_names();

/// Throws ErrorKind::invalid_argument when `inject` names no check or the
/// filter selects nothing.
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

const char* to_string(Compare c);

}  // namespace rhwarp
