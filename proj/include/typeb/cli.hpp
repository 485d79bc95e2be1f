#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace typeb {

// Dispatches one command line (program name excluded).  Writes the result to
// `out` and diagnostics to `err`.  Exit codes: 0 success, 1 domain/arithmetic
// error, 2 usage error; verify-paper returns 0 only when the whole identity
// suite passes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace typeb
