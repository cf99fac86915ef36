#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qg {

/// One checked identity. `pass == (residual <= tolerance)` always holds;
/// non-gating cases are recorded for information and never fail a report.
struct CheckCase {
  std::string name;
  std::string anchor;  // formula text of the identity being checked
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  bool gating = true;
  std::string note;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckCase> cases;
  std::uint64_t seed = 0;
  std::string group;
  double timing_ms = 0.0;

  /// Records a case; pass is derived from residual and tolerance.
  CheckCase& add(std::string name, std::string anchor, double residual, double tolerance,
                 bool gating = true);
  /// Records a boolean condition as residual 0 (holds) or 1 (fails) at tolerance 0.
  CheckCase& add_flag(std::string name, std::string anchor, bool holds, bool gating = true);

  void merge(const VerifyReport& other);
  bool all_pass() const;
  const CheckCase* find(const std::string& name) const;
  double max_residual(const std::string& name_prefix) const;
  /// Orders cases by name (stable), as required for deterministic output.
  void sort_cases();
};

std::string format_report(const VerifyReport& r);

}  // namespace qg
