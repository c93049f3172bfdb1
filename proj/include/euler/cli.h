#ifndef EULER_CLI_H
#define EULER_CLI_H

namespace euler {

// Command-line entry point. Returns the process exit code: 0 on success,
// 1 when a requested check fails, 2 for configuration or usage errors.
int run_cli(int argc, char** argv);

} // namespace euler

#endif
