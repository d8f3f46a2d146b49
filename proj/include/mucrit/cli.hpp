#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mucrit::cli {

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out is given; diagnostics and timings go to `err`.
/// Returns 0 when every check passed or the search completed, 1 when a check
/// failed or a search produced an unexpected witness, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mucrit::cli
