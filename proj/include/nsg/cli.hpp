#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsg::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kEngineError = 2,
  kParseError = 3,
  kGuardExceeded = 4,
  kOutputError = 5,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsg::cli
