#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cl3/report.hpp"

namespace cl3 {

// Parameter grid plus randomized-trial budget for the invariant sweep.
// Identical (config, seed) produce identical reports whether the sweep runs
// on the serial reference path or the parallel one: every work item derives
// its own RNG stream and writes to its own slot.
struct SweepConfig {
  std::vector<double> gammas;
  std::vector<std::pair<double, double>> fields;
  int trials = 2000;
  std::uint64_t seed = 12345;
  bool parallel = true;
  std::map<std::string, double> tolerance_overrides;

  static SweepConfig defaults();

  void validate() const;  // throws std::invalid_argument
};

struct SweepCheckResult {
  std::string name;
  CheckStatus status{CheckStatus::Pass};
  double max_residual{0.0};
  double tolerance{0.0};
  std::size_t points{0};
  std::size_t skipped{0};
  std::string worst;  // parameters at the worst residual
};

struct SweepReport {
  std::vector<SweepCheckResult> checks;  // sorted by name

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
};

SweepReport run_sweep(const SweepConfig& cfg);

std::vector<std::string> sweep_check_names();

}  // namespace cl3
