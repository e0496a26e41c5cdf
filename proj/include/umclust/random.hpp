#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

namespace umclust {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Order-sensitive combination of seed components into one 64-bit seed.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x243F6A8885A308D3ull;
    for (std::uint64_t v : parts) h = splitmix64(h ^ v);
    return h;
}

using Rng = std::mt19937_64;

/// Uniform draw in [0, bound) by rejection; pinned here so results do not
/// depend on the standard library's distribution implementation.
inline std::uint64_t bounded_uint(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

/// Marsaglia polar method; consumes a deterministic number of draws per
/// accepted sample and keeps no state between calls.
inline double gaussian(Rng& rng, double mean = 0.0, double sigma = 1.0) {
    double u, v, s;
    do {
        u = 2.0 * uniform_unit(rng) - 1.0;
        v = 2.0 * uniform_unit(rng) - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    return mean + sigma * u * std::sqrt(-2.0 * std::log(s) / s);
}

template <typename T>
void shuffle_in_place(std::vector<T>& values, Rng& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded_uint(rng, i));
        std::swap(values[i - 1], values[j]);
    }
}

inline std::vector<std::size_t> shuffled_indices(std::size_t count, Rng& rng) {
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    shuffle_in_place(idx, rng);
    return idx;
}

/// k distinct indices drawn uniformly from [0, count); order of selection kept.
inline std::vector<std::size_t> sample_without_replacement(std::size_t count, std::size_t k, Rng& rng) {
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(bounded_uint(rng, count - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

} // namespace umclust
