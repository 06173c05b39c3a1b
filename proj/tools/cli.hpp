#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigspline::cli {

/// Runs one CLI invocation. args excludes the program name. Machine-readable
/// output goes to out, diagnostics to err. Returns the process exit code:
/// 0 success, 2 validation/usage errors, 3 numerical errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace trigspline::cli
