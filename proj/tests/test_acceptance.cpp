// Acceptance gate: runs every verification criterion once, prints one line per
// criterion, and exits nonzero if any check fails or a budgeted criterion runs
// over its time allowance.
#include "vbg/verify.hpp"

#include <cstdio>
#include <string>

namespace {

const char* criterion_label(int c) {
  switch (c) {
    case 1: return "homomorphism census";
    case 2: return "kernel abelianizations";
    case 3: return "quotient descent";
    case 4: return "characteristic certificates";
    case 5: return "twisted fixed-point witnesses";
    case 6: return "character computations";
    case 7: return "crystallographic models";
    case 8: return "twisted class counts";
    case 9: return "randomized property suites";
    default: return "?";
  }
}

}  // namespace

int main() {
  int passed = 0;
  for (int c = 1; c <= vbg::kCriterionCount; ++c) {
    vbg::VerifyReport report = vbg::verify_criterion(c);
    long long budget = vbg::criterion_budget_ms(c);
    bool within_budget = budget == 0 || report.elapsed_ms <= budget;
    bool pass = report.ok() && within_budget;
    std::printf("criterion %d: %s (%s, %zu checks, %lld ms", c, pass ? "PASS" : "FAIL",
                criterion_label(c), report.checks.size(), report.elapsed_ms);
    if (budget > 0) std::printf(", budget %lld ms", budget);
    std::printf(")\n");
    if (!within_budget)
      std::printf("  over budget: %lld ms > %lld ms\n", report.elapsed_ms, budget);
    for (const vbg::CheckResult& check : report.checks)
      if (!check.pass)
        std::printf("  FAIL %s: expected %s, got %s\n", check.name.c_str(),
                    check.expected.c_str(), check.actual.c_str());
    if (pass) ++passed;
  }
  std::printf("acceptance: %d/%d criteria pass\n", passed, vbg::kCriterionCount);
  return passed == vbg::kCriterionCount ? 0 : 1;
}
