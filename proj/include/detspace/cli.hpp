#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace detspace {

// Full command-line entry point: parses args (no program name), runs the
// subcommand, writes reports to out and diagnostics to err. Exit codes:
// 0 success / verification passed, 1 verification failed, 2 usage or cap or
// input errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace detspace
