#ifndef EULER_RNG_H
#define EULER_RNG_H

#include <cstdint>
#include <random>

namespace euler {

// Deterministic uniform variates. std::mt19937_64 has a pinned-down output
// sequence; the distributions in <random> do not, so draws go through an
// explicit 53-bit mantissa conversion to stay bit-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Uniform in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    std::uint64_t bits() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace euler

#endif
