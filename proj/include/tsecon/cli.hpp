#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsecon {

/// Runs the command-line driver with `args` (program name excluded).
/// Returns the process exit code: 0 success, 1 usage, 2 data or I/O, 3 numerical.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsecon
