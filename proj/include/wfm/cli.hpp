#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfm::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kSuccess = 0,
  kInvariantFailure = 1,
  kUsageError = 2,
};

/// Runs the `wfm` command line. Default base preset comes from $WFM_BASE
/// when --base is not given, otherwise F1.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfm::cli
