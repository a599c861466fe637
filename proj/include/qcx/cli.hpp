#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcx {

/// Exit codes of the qcx command.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // a check ran and did not reproduce
  kExitSpec = 2,
  kExitBudget = 3,
  kExitPrecondition = 4,
};

/// Runs the command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcx
