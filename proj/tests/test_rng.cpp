#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "craftbench/rng.hpp"

using namespace craftbench;

// Reference values from an independent Python implementation of the
// SplitMix64 finalizer and xoshiro256**.
TEST(Rng, EpisodeSeedMatchesReference) {
    EXPECT_EQ(derive_episode_seed(0, 0), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(derive_episode_seed(0, 1), 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(derive_episode_seed(42, 7), 0x272404a0a3926552ULL);
    EXPECT_EQ(derive_episode_seed(~0ULL, 123456), 0x888bfb50dc87a2d2ULL);
}

TEST(Rng, XoshiroMatchesReference) {
    Rng a(0);
    EXPECT_EQ(a.next(), 0x99ec5f36cb75f2b4ULL);
    EXPECT_EQ(a.next(), 0xbf6e1f784956452aULL);
    EXPECT_EQ(a.next(), 0x1a5f849d4933e6e0ULL);
    Rng b(12345);
    EXPECT_EQ(b.next(), 0xbe6a36374160d49bULL);
    EXPECT_EQ(b.next(), 0x214aaa0637a688c6ULL);
}

TEST(Rng, EpisodeSeedIsDeterministicAndDistinct) {
    EXPECT_EQ(derive_episode_seed(7, 3), derive_episode_seed(7, 3));
    std::set<std::uint64_t> seen;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        seen.insert(derive_episode_seed(7, k));
    }
    EXPECT_EQ(seen.size(), 1000u);
}

TEST(Rng, EpisodeSeedAvalanche) {
    Rng inputs(99);
    double flipped_seed = 0.0;
    double flipped_index = 0.0;
    constexpr int kTrials = 10000;
    for (int i = 0; i < kTrials; ++i) {
        const std::uint64_t s = inputs.next();
        const std::uint64_t k = inputs.next() >> 1U;
        const std::uint64_t base = derive_episode_seed(s, k);
        const unsigned bit = inputs.below(64);
        flipped_seed += std::popcount(base ^ derive_episode_seed(s ^ (1ULL << bit), k));
        const unsigned kbit = inputs.below(63);
        flipped_index += std::popcount(base ^ derive_episode_seed(s, k ^ (1ULL << kbit)));
    }
    flipped_seed /= kTrials;
    flipped_index /= kTrials;
    EXPECT_GE(flipped_seed, 28.0);
    EXPECT_LE(flipped_seed, 36.0);
    EXPECT_GE(flipped_index, 28.0);
    EXPECT_LE(flipped_index, 36.0);
}

TEST(Rng, StreamsAreIndependent) {
    const auto seed = derive_episode_seed(1, 2);
    std::set<std::uint64_t> seeds;
    for (auto s : {Stream::worldgen, Stream::creatures, Stream::spawning, Stream::view_noise, Stream::interaction,
                   Stream::policy}) {
        seeds.insert(stream_seed(seed, s));
    }
    EXPECT_EQ(seeds.size(), 6u);
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
    Rng r(5);
    std::array<int, 17> hits{};
    for (int i = 0; i < 17000; ++i) {
        const auto v = r.below(17);
        ASSERT_LT(v, 17u);
        ++hits[v];
    }
    for (int h : hits) {
        EXPECT_GT(h, 800);
        EXPECT_LT(h, 1200);
    }
}

TEST(Rng, UniformIsHalfOpen) {
    Rng r(6);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 100000.0, 0.5, 0.01);
}
