#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vbg {

// Runs the command-line tool on `args` (program name excluded), writing
// the report to `out` and diagnostics to `err`.  Returns the process
// exit code: 0 on success or a passing verification, 1 on a
// verification mismatch, 2 on a usage or input error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vbg
