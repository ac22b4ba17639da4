#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace groth::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInvalid = 2 };

// Runs the command line; output goes to `out` unless --out names a file.
// Diagnostics (one line) go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groth::cli
