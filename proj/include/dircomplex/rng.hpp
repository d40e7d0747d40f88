/**
 * Seeded random streams.
 *
 * All randomness in the library comes from SplitMix64 (Steele, Lea, Flood
 * 2014): state += 0x9E3779B97F4A7C15, output = mix(state). The generator is
 * tiny, fully specified, and easy to reproduce bit-for-bit in any language,
 * which is the point: test vectors computed here can be regenerated elsewhere.
 *
 * Streams are split by purpose label. Rng::derive(seed, "label", k) gives an
 * independent stream for the k-th use of "label" under a root seed, so adding
 * a new consumer never shifts the draws of an existing one.
 *
 * Bounded integers use rejection sampling on the top bits (no modulo bias);
 * doubles take the top 53 bits.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <utility>
#include <vector>

namespace dircomplex {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// FNV-1a 64-bit; used for purpose labels and input fingerprints.
    static constexpr std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xCBF29CE484222325ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001B3ULL;
        }
        return h;
    }

    static constexpr std::uint64_t derive(std::uint64_t seed, std::string_view label,
                                          std::uint64_t index = 0) {
        return mix(mix(seed ^ fnv1a(label)) + index * 0x9E3779B97F4A7C15ULL);
    }

    static Rng stream(std::uint64_t seed, std::string_view label, std::uint64_t index = 0) {
        return Rng(derive(seed, label, index));
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // Smallest all-ones mask covering bound - 1, then reject.
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            std::uint64_t r = next() & mask;
            if (r < bound) return r;
        }
    }

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace dircomplex
