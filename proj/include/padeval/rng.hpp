#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace padeval::rng {

// Splittable counter-based generator. Every output word is a pure function
// of (key, stream, counter), so any draw can be computed independently of
// all others; parallel consumers just partition the counter space.
//
// word(key, stream, counter):
//   h = fin(key ^ 0x9E3779B97F4A7C15)
//   h = fin(h ^ stream  ^ 0xC2B2AE3D27D4EB4F)
//   h = fin(h ^ counter ^ 0x165667B19E3779F9)
// where fin() is the SplitMix64 finalizer.

inline std::uint64_t fin(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

inline std::uint64_t word(std::uint64_t key, std::uint64_t stream, std::uint64_t counter) {
    std::uint64_t h = fin(key ^ 0x9E3779B97F4A7C15ull);
    h = fin(h ^ stream ^ 0xC2B2AE3D27D4EB4Full);
    h = fin(h ^ counter ^ 0x165667B19E3779F9ull);
    return h;
}

// Uniform double in [0,1): top 53 bits of the word scaled by 2^-53.
inline double uniform(std::uint64_t w) {
    return static_cast<double>(w >> 11) * 0x1.0p-53;
}

// Index in [0,n): floor(u*n). The bias relative to a rejection sampler is
// below n/2^53 and irrelevant at the sizes used here; for n a power of two
// the result is exact.
inline std::size_t index(std::uint64_t w, std::size_t n) {
    auto i = static_cast<std::size_t>(uniform(w) * static_cast<double>(n));
    return i < n ? i : n - 1;
}

// Standard normal via Box-Muller, cosine branch only. Sample i consumes
// counters 2i and 2i+1 of its stream:
//   u1 = uniform(word(key, stream, 2i))
//   u2 = uniform(word(key, stream, 2i+1))
//   z  = sqrt(-2 ln(1-u1)) * cos(2 pi u2)
inline double gaussian(std::uint64_t key, std::uint64_t stream, std::uint64_t sample_index) {
    const double u1 = uniform(word(key, stream, 2 * sample_index));
    const double u2 = uniform(word(key, stream, 2 * sample_index + 1));
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

// In-place Fisher-Yates shuffle driven by one stream; step k (k = 0,1,...)
// uses counter k to pick the swap partner for position n-1-k.
template <typename T>
void shuffle(std::vector<T>& v, std::uint64_t key, std::uint64_t stream) {
    if (v.size() < 2) return;
    std::uint64_t counter = 0;
    for (std::size_t i = v.size() - 1; i > 0; --i) {
        const std::size_t j = index(word(key, stream, counter++), i + 1);
        std::swap(v[i], v[j]);
    }
}

}  // namespace padeval::rng
