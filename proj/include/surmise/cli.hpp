#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surmise {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitMalformedInput = 2,
  kExitConstraint = 3,
};

/// Entry point behind the `surmise` executable. `args` excludes the program
/// name. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surmise
