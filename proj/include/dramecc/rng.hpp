#pragma once

#include <cstdint>
#include <limits>

namespace dramecc {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Counter-based generator: output i is mix64(key + (i+1) * gamma). Streams
/// are addressed by (seed, a, b) so any trial can be regenerated without
/// replaying its predecessors. Satisfies UniformRandomBitGenerator.
class CounterRng {
public:
    using result_type = std::uint64_t;

    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    constexpr explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

    /// Stream for trial `b` of iteration `a` under master seed `seed`.
    static constexpr CounterRng stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept
    {
        std::uint64_t k = mix64(seed ^ 0x6A09E667F3BCC909ull);
        k = mix64(k ^ (a * kGamma + 0x3C6EF372FE94F82Bull));
        k = mix64(k ^ (b * 0xD1B54A32D192ED03ull + 0xA54FF53A5F1D36F1ull));
        return CounterRng(k);
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept
    {
        ++counter_;
        return mix64(key_ + counter_ * kGamma);
    }

    /// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
    constexpr std::uint32_t below(std::uint32_t bound) noexcept
    {
        std::uint64_t m = static_cast<std::uint64_t>(static_cast<std::uint32_t>((*this)() >> 32)) * bound;
        auto low = static_cast<std::uint32_t>(m);
        if (low < bound) {
            const std::uint32_t threshold = static_cast<std::uint32_t>(-bound) % bound;
            while (low < threshold) {
                m = static_cast<std::uint64_t>(static_cast<std::uint32_t>((*this)() >> 32)) * bound;
                low = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32);
    }

    constexpr std::uint32_t next32() noexcept { return static_cast<std::uint32_t>((*this)() >> 32); }

    constexpr std::uint64_t draws() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace dramecc
