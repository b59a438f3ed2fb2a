#pragma once

#include <array>
#include <cstdint>

namespace craftbench {

// SplitMix64 finalizer (Steele, Lea, Flood 2014): constants 0xbf58476d1ce4e5b9
// and 0x94d049bb133111eb with shifts 30/27/31. Full 64-bit avalanche.
constexpr auto mix64(std::uint64_t z) noexcept -> std::uint64_t {
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// Seed of episode `episode_index` in a run. Pure, platform independent.
constexpr auto derive_episode_seed(std::uint64_t run_seed, std::uint64_t episode_index) noexcept -> std::uint64_t {
    return mix64(mix64(run_seed) + kGoldenGamma * (episode_index + 1));
}

// Independent random streams derived from one episode seed, so that a change
// in one subsystem's consumption never perturbs another's.
enum class Stream : std::uint64_t {
    worldgen = 0x776f726c64ULL,
    creatures = 0x6372656174ULL,
    spawning = 0x737061776eULL,
    view_noise = 0x6e6f697365ULL,
    interaction = 0x696e746572ULL,
    policy = 0x706f6c6963ULL,
};

constexpr auto stream_seed(std::uint64_t seed, Stream stream) noexcept -> std::uint64_t {
    return mix64(seed ^ mix64(static_cast<std::uint64_t>(stream)));
}

// xoshiro256** seeded through SplitMix64. Distributions are implemented here
// rather than via <random> so sequences are identical on every standard library.
class Rng {
public:
    Rng() noexcept : Rng(0) {}
    explicit Rng(std::uint64_t seed) noexcept { reseed(seed); }

    void reseed(std::uint64_t seed) noexcept {
        std::uint64_t z = seed;
        for (auto &word : s_) {
            z += kGoldenGamma;
            word = mix64(z);
        }
    }

    auto next() noexcept -> std::uint64_t {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17U;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 bits of resolution.
    auto uniform() noexcept -> double { return static_cast<double>(next() >> 11U) * 0x1.0p-53; }

    // Uniform integer in [0, bound). Lemire's multiply-shift with rejection.
    auto below(std::uint32_t bound) noexcept -> std::uint32_t {
        std::uint64_t m = static_cast<std::uint64_t>(static_cast<std::uint32_t>(next() >> 32U)) * bound;
        auto low = static_cast<std::uint32_t>(m);
        if (low < bound) {
            const std::uint32_t threshold = (0U - bound) % bound;
            while (low < threshold) {
                m = static_cast<std::uint64_t>(static_cast<std::uint32_t>(next() >> 32U)) * bound;
                low = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32U);
    }

    auto chance(double p) noexcept -> bool { return uniform() < p; }

    auto state() const noexcept -> const std::array<std::uint64_t, 4> & { return s_; }
    auto operator==(const Rng &) const noexcept -> bool = default;

private:
    static constexpr auto rotl(std::uint64_t x, int k) noexcept -> std::uint64_t {
        return (x << static_cast<unsigned>(k)) | (x >> static_cast<unsigned>(64 - k));
    }

    std::array<std::uint64_t, 4> s_{};
};

}    // namespace craftbench
