#pragma once

#include <chrono>
#include <string>

namespace idpda {

enum class CheckStatus { pass, fail, budget };

/// Outcome of one verification check. A failing check carries both the
/// expected and the observed value; a budget status means the check could
/// not finish within its configured resource limits.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string expected;
  std::string observed;
  std::chrono::milliseconds runtime{0};

  bool passed() const { return status == CheckStatus::pass; }
};

/// Convenience constructor: pass iff expected == observed.
CheckResult make_check(std::string id, std::string expected, std::string observed);

}  // namespace idpda
