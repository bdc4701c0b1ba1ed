#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mackey {

// Runs the command line given by args (program name excluded), writing
// reports to out and diagnostics to err.  Returns the process exit code:
// 0 success, 1 usage or input error, 2 verification failure or internal
// inconsistency.  Never throws.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace mackey
