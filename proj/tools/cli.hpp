#ifndef CIRCNUT_TOOLS_CLI_HPP
#define CIRCNUT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace circnut::cli {

/// Runs one command line (args excludes the program name).
/// Exit codes: 0 success, 1 violated precondition, 2 usage error. Errors are
/// reported on `out` as {"error": code, "message": text}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circnut::cli

#endif  // CIRCNUT_TOOLS_CLI_HPP
