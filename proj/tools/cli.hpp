#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdg::cli {

enum ExitCode : int {
    kOk = 0,
    kRelationFailure = 1,
    kUsage = 2,
    kIntegrity = 3,
    kMatrixGate = 4,
};

/// Runs the command line `args` (args[0] is the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdg::cli
