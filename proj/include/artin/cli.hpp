#pragma once

#include <ostream>
#include <span>
#include <string>

namespace artin::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kResourceError = 2,
  kCertificationFailure = 3,
};

/// Runs one invocation. `args` excludes the program name. JSON mode writes a
/// single document to `out`; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace artin::cli
