#ifndef GEEZ_RNG_HPP
#define GEEZ_RNG_HPP

#include <cstdint>
#include <random>

namespace geez {

// All randomness in the library flows from a single user seed, fanned out to
// submodules by mixing with fixed stream tags. The mapping from raw engine
// output to ints/reals is hand-rolled so that generated bytes do not depend
// on the standard library's distribution implementations.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    return splitmix64(seed ^ splitmix64(tag));
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag_a, std::uint64_t tag_b) {
    return mix_seed(mix_seed(seed, tag_a), tag_b);
}

// Stream tags for the seed fan-out.
namespace seed_tag {
inline constexpr std::uint64_t kInit = 0x1;     // weight initialization
inline constexpr std::uint64_t kSplit = 0x2;    // train/test split shuffle
inline constexpr std::uint64_t kSynth = 0x3;    // synthetic dataset generation
} // namespace seed_tag

using Rng = std::mt19937_64;

// Uniform double in [lo, hi) from the top 53 bits of one engine draw.
inline double rng_real(Rng& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

// Uniform index in [0, n). n must be positive.
inline std::uint64_t rng_index(Rng& rng, std::uint64_t n) {
    return rng() % n;
}

// Uniform integer in [lo, hi] inclusive.
inline long long rng_int(Rng& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng_index(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// True with probability p.
inline bool rng_chance(Rng& rng, double p) {
    return rng_real(rng, 0.0, 1.0) < p;
}

} // namespace geez

#endif
