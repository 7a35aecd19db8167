#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace primtower {

/// Runs the command line `args` (without the program name). Returns the exit
/// status: 0 on success, 1 for a negative verdict (is-integrable, integrate),
/// 2 on errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primtower
