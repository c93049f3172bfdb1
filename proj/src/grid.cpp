#include "euler/grid.h"

namespace euler {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Grid3::Grid3(int n1_, int n2_, int n3_, double L1_, double L2_)
    : n1(n1_), n2(n2_), n3(n3_), L1(L1_), L2(L2_) {
    if (!is_power_of_two(n1) || !is_power_of_two(n2) || n1 < 4 || n2 < 4)
        throw ConfigError("grid: n1 and n2 must be powers of two, at least 4");
    if (n3 < 8) throw ConfigError("grid: n3 >= 8 required");
    if (L1 <= 0.0 || L2 <= 0.0) throw ConfigError("grid: periods must be positive");
}

} // namespace euler
