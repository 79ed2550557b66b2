#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace graphcap::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kNotConverged = 3 };

/// Runs one command line (argv[0] is the program name). The report goes to
/// `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphcap::cli
