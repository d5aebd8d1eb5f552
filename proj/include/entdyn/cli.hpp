// Command-line front end.  Kept behind a plain function so the test suite
// can drive it in process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entdyn {

// Runs the tool on the given arguments (program name excluded), writing
// results to out and diagnostics to err.  Returns the process exit code:
// 0 on success, 1 when the self-check command finds a failure, 2 on usage
// or validation errors.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace entdyn
