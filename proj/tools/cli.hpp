#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gtrig::cli {

/// Runs the command line `args` (without the program name) and returns
/// the process exit code: 0 ok, 1 verify failures, 2 input error,
/// 3 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtrig::cli
