#pragma once

// Oracle suite: closed forms and expansions checked against the numerical
// Lifshitz evaluation, each reported with its residual and tolerance.

#include <iosfwd>
#include <string>
#include <vector>

namespace cpkit::app {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail; ///< set when the check threw
};

std::vector<CheckResult> self_check();

/// One line per check; returns true when every check passed.
bool print_checks(std::ostream& out, const std::vector<CheckResult>& checks);

} // namespace cpkit::app
