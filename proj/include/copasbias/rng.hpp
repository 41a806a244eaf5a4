#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace copasbias {

using Rng = std::mt19937_64;

// Stream purposes, part of the stream-derivation key so that population,
// selection, pilot and figure draws never share an engine.
enum : std::uint64_t {
    kStreamPopulation = 1,
    kStreamSelection = 2,
    kStreamPilotPopulation = 3,
    kStreamPilotSelection = 4,
    kStreamFigure = 5,
};

namespace detail {
// splitmix64 finalizer (Vigna). Good avalanche for key mixing.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace detail

// Hashes an ordered key into a 64-bit stream seed.
inline std::uint64_t mix_key(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x6a09e667f3bcc909ULL;
    for (std::uint64_t p : parts) {
        h = detail::splitmix64(h ^ p);
    }
    return h;
}

// Independent, reproducible stream for (master seed, scenario, replicate,
// purpose[, salt]). Replicates executed concurrently must each derive their
// own stream; results are then independent of scheduling.
inline Rng make_stream(std::initializer_list<std::uint64_t> key) {
    return Rng(mix_key(key));
}

inline double draw_normal(Rng& rng) {
    std::normal_distribution<double> dist;
    return dist(rng);
}

inline double draw_uniform(Rng& rng) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    return dist(rng);
}

}  // namespace copasbias
