#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nlsis::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 1 runtime or correctness
/// failure, 2 usage or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlsis::cli
