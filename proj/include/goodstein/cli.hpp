#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace goodstein::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kBudget = 3,
  kMirrorViolation = 4,
  kClaimFailure = 5,
};

// Runs one command line (without the program name). Machine output goes to
// `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace goodstein::cli
