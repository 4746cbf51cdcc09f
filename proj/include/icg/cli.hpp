#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icg::cli {

// Process exit codes of the `icg` tool.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationMismatch = 1,
    kValidationError = 2,
    kDisconnected = 3,
    kCapExceeded = 4,
};

/// Runs the tool on args (args[0] is the program name). Payload goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icg::cli
