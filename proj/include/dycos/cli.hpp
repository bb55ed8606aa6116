#pragma once
// Command-line front end: one binary with subcommands wiring the pipeline
// (load -> vocabulary -> classify / evaluate -> reports).

#include <iosfwd>
#include <string>
#include <vector>

namespace dycos {

// Runs the CLI with the given arguments (program name excluded). Returns the
// process exit code: 0 success, 1 usage error, 2 data error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dycos
