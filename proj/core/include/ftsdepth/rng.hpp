#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace fts::rng {

/// splitmix64 finalizer; good avalanche, used to derive independent
/// sub-stream seeds from (seed, tag, index...) tuples.
inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                            std::uint64_t c = 0) {
    std::uint64_t h = mix(seed);
    h = mix(h ^ a);
    h = mix(h ^ b);
    h = mix(h ^ c);
    return h;
}

/// Engine for the sub-stream identified by (seed, a, b, c). Streams with
/// distinct identifiers are independent for all practical purposes, so
/// parallel workers can draw without coordination.
inline std::mt19937_64 stream(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0,
                              std::uint64_t c = 0) {
    return std::mt19937_64(derive(seed, a, b, c));
}

/// Uniform draw on [0, 1) with 53 random bits. Implementation-defined
/// std::uniform_real_distribution is avoided so that identical streams
/// give identical values on every platform.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Fills `out` with standard normal draws via Box-Muller; consumes exactly
/// 2*ceil(out.size()/2) uniforms. Own implementation because the library
/// promises bit-identical output for a given seed.
inline void fill_gaussian(std::mt19937_64& eng, std::span<double> out) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (std::size_t i = 0; i < out.size(); i += 2) {
        const double u1 = 1.0 - uniform01(eng); // (0, 1], keeps log finite
        const double u2 = uniform01(eng);
        const double r = std::sqrt(-2.0 * std::log(u1));
        out[i] = r * std::cos(two_pi * u2);
        if (i + 1 < out.size()) out[i + 1] = r * std::sin(two_pi * u2);
    }
}

inline double gaussian(std::mt19937_64& eng) {
    double z[1];
    fill_gaussian(eng, z);
    return z[0];
}

/// Uniform integer in [0, bound). bound must be >= 1.
inline std::uint64_t uniform_index(std::mt19937_64& eng, std::uint64_t bound) {
    // 53-bit scaling; bias is < 2^-53 per draw, negligible for resampling.
    auto idx = static_cast<std::uint64_t>(uniform01(eng) * static_cast<double>(bound));
    return idx >= bound ? bound - 1 : idx;
}

} // namespace fts::rng
