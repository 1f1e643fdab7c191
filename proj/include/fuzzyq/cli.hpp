#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fuzzyq::cli {

enum ExitCode : int { ok = 0, usage = 1, invalid = 2, undetermined = 3 };

// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzyq::cli
