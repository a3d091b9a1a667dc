#ifndef QALLOC_CLI_HPP
#define QALLOC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qalloc {

/// Entry point of the `qalloc` tool; `args` excludes the program name.
/// Results go to `out` (or -o files), diagnostics and logs to `err`.
/// Exit codes: 0 success, 1 unsupported/infeasible/budget/bound violation,
/// 2 malformed input or flags.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qalloc

#endif  // QALLOC_CLI_HPP
