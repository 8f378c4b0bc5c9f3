#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revca {

// Runs one CLI invocation. `args` excludes the program name. Returns the
// process exit status: 0 on success, 1 when --expect-reversible meets an
// irreversible vector or `classify` finds a reference mismatch, 2 on
// usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revca
