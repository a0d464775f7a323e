#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liereach {

/// Runs the command line (without the program name). Returns the exit code:
/// 0 success, 2 parse or argument error, 3 validation error, 4 runtime error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liereach
