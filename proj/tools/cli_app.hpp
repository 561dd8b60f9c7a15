#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pforge::cli {

/// Process exit statuses of planted-forge.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,               // bad flags or arguments
  kUnknownProblemType = 3,
  kConfigError = 4,         // unreadable or invalid config file
  kGenerationError = 5,
  kWriteError = 6,
  kVerifyMismatch = 10,     // verify: energy or degeneracy differs
  kVerifyTooLarge = 11,     // verify: instance exceeds the oracle cap
  kVerifyParseError = 12,   // verify: instance file unreadable or malformed
};

/// Runs the tool on argv-style arguments (without the program name).
/// Diagnostics go to `err`, informational output to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pforge::cli
