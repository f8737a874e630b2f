#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace balkit::cli {

enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_usage = 2 };

// Entry point shared by the binary and the tests. args excludes the program
// name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// --jobs if positive, else BALKIT_JOBS, else hardware concurrency.
unsigned resolve_jobs(int flag);

}  // namespace balkit::cli
