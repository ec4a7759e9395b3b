#pragma once

// Seed-derivation and sampling helpers shared by the audits, the simulator
// and the experiment harness. Streams are derived by index from a master
// seed so work can be partitioned without reshuffling earlier draws.

#include <cmath>
#include <cstdint>
#include <random>

namespace rrp::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

inline std::mt19937_64 make_rng(std::uint64_t master, std::uint64_t index) {
    return std::mt19937_64(derive_stream(master, index));
}

/// Uniform in [0, 1) with 53 random bits; keeps streams independent of the
/// standard library's distribution internals.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

/// Exponential with the given rate; infinity when the rate is zero.
inline double sample_exponential(std::mt19937_64& rng, double rate) {
    if (!(rate > 0.0)) return std::numeric_limits<double>::infinity();
    return -std::log1p(-uniform01(rng)) / rate;
}

}  // namespace rrp::detail
