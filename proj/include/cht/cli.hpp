// Command front end of the `thrackle` tool.
//
// Exit status: 0 valid / success, 1 invalid instance, failed check or bad
// input data, 2 usage error, 3 internal error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cht {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitUsage = 2,
  kExitInternal = 3,
};

/// Runs one command. `args` excludes the program name. A file argument of
/// "-" reads `in`; an output path of "-" (or none) writes `out`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cht
