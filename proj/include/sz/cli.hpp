#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sz::cli {

/// Process exit codes. Stable for scripting.
enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kBadArguments = 2,
    kCeilingExceeded = 3,
    kPreconditionViolated = 4,
};

/// Run one command line (without the program name). Results go to out,
/// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sz::cli
