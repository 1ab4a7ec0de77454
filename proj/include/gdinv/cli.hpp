#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdinv::cli {

/// Runs the command line given args (without the program name), writing
/// results to `out` and diagnostics to `err`.
///
/// Exit codes: 0 success / all checks pass; 1 a verification clause or order
/// relation failed; 2 input error (malformed matrices, infeasible specs,
/// invalid inverse arguments, bad flags).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gdinv::cli
