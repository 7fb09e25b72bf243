#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sawlab::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2, resource = 3, invariant = 4 };

/// Runs one command line (without the program name).  Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sawlab::cli
