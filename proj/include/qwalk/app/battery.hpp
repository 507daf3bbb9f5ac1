#pragma once

// Acceptance battery: numbered criteria plus module-level checks.
// Quick level trims the parameter sweeps; full level runs them completely,
// including the N = 128 points.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qwalk::app {

enum class Level { Quick, Full };

std::optional<Level> parse_level(std::string_view name);

struct CheckResult {
  std::string id;    // "C01".."C12" for criteria, "M-..." for module checks
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 12;

/// Criterion 1..12. Exceptions inside a check become a failing result.
CheckResult run_criterion(int number, Level level);

std::vector<CheckResult> run_module_checks(Level level);

/// Module checks first, then the criteria.
std::vector<CheckResult> run_battery(Level level);

/// One line per check: "PASS  C01  unitarity  <detail>  (0.12 s)".
std::string format_check(const CheckResult& result);

}  // namespace qwalk::app
