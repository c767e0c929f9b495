#ifndef POLARCG_CLI_HPP
#define POLARCG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polarcg::cli {

/// Runs one CLI invocation (argv without the program name). Exit codes:
/// 0 success, 1 verification failure, 2 bad input, 3 resource budget.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polarcg::cli

#endif
