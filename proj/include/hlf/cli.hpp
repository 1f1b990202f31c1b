#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hlf::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationError = 2,
  kOracleDisagreement = 3,
  kResourceCap = 4,
};

/// Runs one command line (args[0] is the program name). Normal output goes to
/// `out`; failures print {"error", "message"} JSON to `err` and return the
/// matching ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlf::cli
