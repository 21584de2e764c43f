#pragma once

// Golden-value verification.  Every finite computation the library
// mechanizes is re-run and compared against the reference values
// embedded from data/golden.json, grouped two ways: by report section
// (the layout of the source material) and by acceptance criterion
// (the numbered exit gate the test suite enforces).

#include <cstdint>
#include <string>
#include <vector>

namespace vbg {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::string scope;
  std::vector<CheckResult> checks;
  long long elapsed_ms = 0;

  int failures() const;
  bool ok() const { return failures() == 0; }
};

// "1", "3", "4.1", "4.2", "4.3", "appendix"
const std::vector<std::string>& verify_section_names();
VerifyReport verify_section(const std::string& section, int threads = 1,
                            uint64_t seed = 12345);

inline constexpr int kCriterionCount = 9;
VerifyReport verify_criterion(int criterion, int threads = 1, uint64_t seed = 12345);

// Wall-clock budget in milliseconds for a criterion, or 0 for none.
long long criterion_budget_ms(int criterion);

// Raw text of the embedded reference data.
const char* golden_json_text();

}  // namespace vbg
