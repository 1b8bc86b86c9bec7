#pragma once

#include <cstdint>

namespace eprsim {

/// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    return mix64(h ^ (mix64(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

/// Counter-based generator: every (index, lane) pair maps to an independent
/// 64-bit word, so a sample's random numbers depend only on (seed, stream,
/// index) and never on which thread draws them or in what order.
class CounterRng {
public:
    static constexpr std::uint32_t kLanes = 4;

    constexpr explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), key_(hash_combine(mix64(seed), stream)) {}

    constexpr std::uint64_t seed() const { return seed_; }

    constexpr std::uint64_t bits(std::uint64_t index, std::uint32_t lane) const {
        return mix64(key_ + (index * kLanes + lane + 1) * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform on [0, 1) with 53 random bits.
    constexpr double uniform(std::uint64_t index, std::uint32_t lane) const {
        return static_cast<double>(bits(index, lane) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t seed_;
    std::uint64_t key_;
};

}  // namespace eprsim
