#pragma once
#include <string>
#include <vector>

namespace cl3 {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckEntry {
  std::string name;
  CheckStatus status{CheckStatus::Pass};
  double residual{0.0};
  std::string note;
};

struct VerificationReport {
  std::vector<CheckEntry> entries;

  void add(std::string name, CheckStatus status, double residual,
           std::string note = {}) {
    entries.push_back({std::move(name), status, residual, std::move(note)});
  }

  bool passed() const {
    for (const auto& e : entries)
      if (e.status == CheckStatus::Fail) return false;
    return true;
  }

  double max_residual() const {
    double m = 0.0;
    for (const auto& e : entries)
      if (e.status != CheckStatus::Skip && e.residual > m) m = e.residual;
    return m;
  }

  std::size_t skipped() const {
    std::size_t n = 0;
    for (const auto& e : entries)
      if (e.status == CheckStatus::Skip) ++n;
    return n;
  }
};

}  // namespace cl3
