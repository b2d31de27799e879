#ifndef RUNSLAB_CLI_HPP
#define RUNSLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace runslab::cli {

/// Exit codes: 0 success/pass, 1 verification failure, 2 input or
/// configuration error.
enum ExitCode : int { kOk = 0, kFailed = 1, kBadInput = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace runslab::cli

#endif // RUNSLAB_CLI_HPP
