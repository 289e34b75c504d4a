#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace cchp {

// Uniform double in [0, 1) from the top 53 bits, identical on every
// platform for a given seed.
inline double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

inline std::size_t pick_index(std::mt19937_64& rng, std::size_t n) {
    return std::size_t(uniform01(rng) * double(n)) % n;
}

}  // namespace cchp
