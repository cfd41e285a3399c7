// SPDX-License-Identifier: Apache-2.0

#ifndef MDSLIFT_SPLITMIX_HPP
#define MDSLIFT_SPLITMIX_HPP

#include <cstdint>

namespace mdslift {

/**
 * SplitMix64 (Steele, Lea, Flood 2014). The state starts at the seed and
 * advances by 0x9E3779B97F4A7C15 per draw; the output is the standard
 * 30/27/31 xor-shift-multiply finalizer of the new state.
 *
 * Fully specified so seeded draws are identical across platforms and
 * reimplementations.
 */
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound): draws below 2^64 mod bound are rejected, the
    /// accepted draw is reduced mod bound.
    constexpr std::uint64_t uniform(std::uint64_t bound) noexcept
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t z = next();
            if (z >= threshold)
                return z % bound;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace mdslift

#endif // MDSLIFT_SPLITMIX_HPP
