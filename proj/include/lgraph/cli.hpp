#ifndef LGRAPH_CLI_HPP
#define LGRAPH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lgraph::cli {

/// Runs the `lg` tool. args excludes the program name. Returns 0 for success
/// or a "yes" answer, 1 for a well-formed "no", 2 for any error; errors are
/// written to err as a single `error:<kind>:<message>` line.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace lgraph::cli

#endif
