#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gks {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_config = 2, exit_numerical = 3, exit_io = 4 };

/// Entry point of the gks command: run, convergence, list-cases, report.
/// args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

} // namespace gks
