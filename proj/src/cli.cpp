#include "euler/cli.h"

#include <cstdio>

namespace euler {

int run_cli(int, char**) {
    std::fprintf(stderr, "euler-inflow: commands not wired up yet\n");
    return 2;
}

} // namespace euler
