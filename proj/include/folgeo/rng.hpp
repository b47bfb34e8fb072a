#pragma once

#include <cstdint>
#include <random>

namespace folgeo {

// deterministic across platforms: mt19937_64 plus an explicit 53-bit
// conversion instead of std::uniform_real_distribution
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
};

}  // namespace folgeo
