#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cove::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kPrecondition = 2,
  kResource = 3,
};

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cove::cli
