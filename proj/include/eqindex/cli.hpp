#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqindex::cli {

/// Dispatches the command line (without the program name).  Writes the
/// serialized result to out and diagnostics to err.  Exit codes: 0 on
/// success, 2 on validation errors, 3 on audit failure flags.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace eqindex::cli
