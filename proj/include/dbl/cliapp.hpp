#pragma once

namespace dbl {

// Command-line front end; returns the process exit code:
// 0 = all checks passed or were skipped, 1 = a verification failed,
// 2 = usage or parse errors.
int run_cli(int argc, char** argv);

}  // namespace dbl
