#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lupi {

// Full command-line front end (subcommands pne / fit / hist / synth).
// Returns the process exit status: 0 on success, 1 on runtime failure,
// 2 on usage errors. Streams replace stdout/stderr so tests can capture
// output; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lupi
