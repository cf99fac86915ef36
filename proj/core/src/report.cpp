#include "qg/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qg {

CheckCase& VerifyReport::add(std::string name, std::string anchor, double residual,
                             double tolerance, bool gating) {
  CheckCase c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = std::isfinite(residual) && residual <= tolerance;
  c.gating = gating;
  cases.push_back(std::move(c));
  return cases.back();
}

CheckCase& VerifyReport::add_flag(std::string name, std::string anchor, bool holds, bool gating) {
  return add(std::move(name), std::move(anchor), holds ? 0.0 : 1.0, 0.0, gating);
}

void VerifyReport::merge(const VerifyReport& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
  timing_ms += other.timing_ms;
}

bool VerifyReport::all_pass() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const CheckCase& c) { return c.pass || !c.gating; });
}

const CheckCase* VerifyReport::find(const std::string& name) const {
  for (const CheckCase& c : cases)
    if (c.name == name) return &c;
  return nullptr;
}

double VerifyReport::max_residual(const std::string& name_prefix) const {
  double m = 0.0;
  for (const CheckCase& c : cases)
    if (c.name.rfind(name_prefix, 0) == 0) m = std::max(m, c.residual);
  return m;
}

void VerifyReport::sort_cases() {
  std::stable_sort(cases.begin(), cases.end(),
                   [](const CheckCase& a, const CheckCase& b) { return a.name < b.name; });
}

std::string format_report(const VerifyReport& r) {
  std::size_t w = 4;
  for (const CheckCase& c : r.cases) w = std::max(w, c.name.size());
  std::string out = "suite " + r.suite + "  group " + r.group + "  seed " +
                    std::to_string(r.seed) + "\n";
  char buf[64];
  int failed = 0;
  for (const CheckCase& c : r.cases) {
    const char* status = c.pass ? "PASS" : (c.gating ? "FAIL" : "info");
    if (!c.pass && c.gating) ++failed;
    out += status;
    out += "  " + c.name + std::string(w - c.name.size(), ' ');
    std::snprintf(buf, sizeof buf, "  %10.3e <= %8.1e  ", c.residual, c.tolerance);
    out += buf + c.anchor;
    if (!c.note.empty()) out += "  [" + c.note + "]";
    out += "\n";
  }
  std::snprintf(buf, sizeof buf, "%zu cases, %d failed, %.1f ms\n", r.cases.size(), failed,
                r.timing_ms);
  return out + buf;
}

}  // namespace qg
