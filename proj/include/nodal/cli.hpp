#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nodal::cli {

// Runs one command-line invocation.  Results go to `out`, diagnostics to
// `err`.  Returns 0 on success, 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nodal::cli
