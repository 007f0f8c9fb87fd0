#ifndef SPANTRAIL_TOOLS_CLI_HPP
#define SPANTRAIL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace spantrail::cli {

enum ExitCode : int { Holds = 0, Witnessed = 1, Failed = 2 };

/// Runs one command line (without the program name). Documents go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace spantrail::cli

#endif // SPANTRAIL_TOOLS_CLI_HPP
