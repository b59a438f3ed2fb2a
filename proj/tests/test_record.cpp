#include <gtest/gtest.h>

#include <bit>
#include <cstring>
#include <filesystem>
#include <string>

#include "craftbench/env.hpp"
#include "craftbench/error.hpp"
#include "craftbench/harness.hpp"
#include "craftbench/record.hpp"

using namespace craftbench;

namespace {

auto five_steps() -> EpisodeRecord {
    EpisodeRecord rec;
    rec.run_seed = 3;
    rec.episode_index = 12;
    rec.config_hash = 0xdeadbeefcafef00dULL;
    rec.append(Action::move_left, 0.0, false);
    rec.append(Action::do_interact, 1.0, false);
    rec.append(Action::noop, -0.2, false);
    rec.append(Action::make_iron_sword, 0.8, false);
    rec.append(Action::sleep, -0.9, true);
    return rec;
}

auto invalid(std::span<const std::uint8_t> bytes) -> bool {
    try {
        decode_record(bytes);
    } catch (const CraftError &e) {
        return e.code() == ErrorCode::invalid_record;
    }
    return false;
}

void put_u32(std::vector<std::uint8_t> &out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

}    // namespace

TEST(Record, LayoutMatchesHandBuiltBytes) {
    const auto rec = five_steps();
    const std::string header = R"({"length":5,"has_images":false,"run_seed":3,"episode_index":12,)"
                               R"("config_hash":16045690984503111693})";
    std::vector<std::uint8_t> expect = {'C', 'R', 'T', 'R', 1};
    put_u32(expect, static_cast<std::uint32_t>(header.size()));
    expect.insert(expect.end(), header.begin(), header.end());
    for (int a : {1, 5, 0, 16, 6}) {
        expect.push_back(static_cast<std::uint8_t>(a));
    }
    for (float r : {0.0F, 1.0F, -0.2F, 0.8F, -0.9F}) {
        put_u32(expect, std::bit_cast<std::uint32_t>(r));
    }
    for (int d : {0, 0, 0, 0, 1}) {
        expect.push_back(static_cast<std::uint8_t>(d));
    }
    EXPECT_EQ(encode_record(rec), expect);
}

TEST(Record, RoundTripWithoutImages) {
    const auto rec = five_steps();
    const auto back = decode_record(encode_record(rec));
    EXPECT_EQ(back, rec);
    EXPECT_FALSE(back.has_images());
    EXPECT_EQ(back.length(), 5u);
}

TEST(Record, FileNameAndSaveLoad) {
    const auto rec = five_steps();
    EXPECT_EQ(record_filename(rec), "episode-12-5.crtr");
    const auto dir = std::filesystem::temp_directory_path() / "craftbench_record_test";
    const auto path = save_record(rec, dir);
    EXPECT_EQ(path.filename(), "episode-12-5.crtr");
    EXPECT_EQ(load_record(path), rec);
    std::filesystem::remove_all(dir);
    try {
        load_record(path);
        FAIL() << "expected IoFailure";
    } catch (const CraftError &e) {
        EXPECT_EQ(e.code(), ErrorCode::io_failure);
    }
}

TEST(Record, FullLengthEpisodeWithImagesRoundTripsAndReplays) {
    // Standing still in a world without decay lasts the full time limit.
    BalanceConfig cfg;
    cfg.food_period = 1000000;
    cfg.water_period = 1000000;
    cfg.energy_period = 1000000;
    cfg.spawn_probability = 0.0;
    cfg.zombie_chase_probability = 0.0;
    cfg.zombie_move_probability = 0.0;
    cfg.skeleton_shoot_probability = 0.0;
    Env env(cfg);
    env.reset(5, 0);
    EpisodeRecord rec;
    rec.run_seed = 5;
    rec.episode_index = 0;
    rec.config_hash = cfg.hash();
    while (!env.done()) {
        const auto &r = env.step(Action::noop);
        rec.append(Action::noop, r.reward, r.done, &r.observation);
    }
    ASSERT_EQ(rec.length(), 10000u);
    ASSERT_EQ(rec.images.size(), 10000u * kObsBytes);
    {
        const auto bytes = encode_record(rec);
        const auto back = decode_record(bytes);
        EXPECT_TRUE(back == rec);
        EXPECT_EQ(std::memcmp(back.image(9999).data(), env.observation().data(), kObsBytes), 0);
    }
    const auto report = verify_replay(rec, cfg);
    EXPECT_TRUE(report.ok) << report.mismatch;
    EXPECT_EQ(report.steps, 10000u);
}

TEST(Record, CorruptInputIsRejected) {
    const auto good = encode_record(five_steps());
    ASSERT_FALSE(invalid(good));

    EXPECT_TRUE(invalid(std::span<const std::uint8_t>()));
    auto b = good;
    b[0] = 'X';
    EXPECT_TRUE(invalid(b));
    b = good;
    b[4] = 2;
    EXPECT_TRUE(invalid(b));
    b = good;
    b[5] = 0xff;
    EXPECT_TRUE(invalid(b));
    b = good;
    b.pop_back();
    EXPECT_TRUE(invalid(b));
    b = good;
    b.push_back(0);
    EXPECT_TRUE(invalid(b));
    b = good;
    b[9] = '[';
    EXPECT_TRUE(invalid(b));
    // Action byte 17 and done byte 2.
    const std::size_t body = good.size() - 5 * 6;
    b = good;
    b[body] = 17;
    EXPECT_TRUE(invalid(b));
    b = good;
    b[good.size() - 1] = 2;
    EXPECT_TRUE(invalid(b));
    // Every truncation of a valid record is invalid.
    for (std::size_t n = 0; n < good.size(); ++n) {
        EXPECT_TRUE(invalid(std::span<const std::uint8_t>(good.data(), n))) << n;
    }
}

TEST(Record, InconsistentArraysCannotBeEncoded) {
    auto rec = five_steps();
    rec.dones.pop_back();
    try {
        encode_record(rec);
        FAIL() << "expected InvalidArgument";
    } catch (const CraftError &e) {
        EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
    }
}

TEST(Record, RunPolicyRecordsEveryKthEpisode) {
    const auto dir = std::filesystem::temp_directory_path() / "craftbench_record_run";
    std::filesystem::remove_all(dir);
    RandomPolicy policy;
    RunOptions opt;
    opt.run_seed = 4;
    opt.budget_steps = 3000;
    opt.record_every = 2;
    opt.record_dir = dir;
    const auto result = run_policy(policy, opt);
    std::size_t expected = 0;
    for (const auto &e : result.episodes) {
        expected += e.episode_index % 2 == 0 ? 1 : 0;
    }
    ASSERT_EQ(result.records.size(), expected);
    for (const auto &path : result.records) {
        const auto rec = load_record(path);
        EXPECT_TRUE(rec.has_images());
        EXPECT_EQ(rec.episode_index % 2, 0u);
        EXPECT_EQ(static_cast<int>(rec.length()), result.episodes[rec.episode_index].length);
        const auto report = verify_replay(rec, opt.config);
        EXPECT_TRUE(report.ok) << report.mismatch;
        EXPECT_EQ(report.return_tenths, result.episodes[rec.episode_index].return_tenths);
        EXPECT_EQ(report.achievements, result.episodes[rec.episode_index].achievements);
    }
    std::filesystem::remove_all(dir);
}

TEST(Record, ReplayDetectsTampering) {
    RandomPolicy policy;
    RunOptions opt;
    opt.run_seed = 6;
    opt.budget_steps = 1;
    opt.record_every = 1;
    opt.record_dir = std::filesystem::temp_directory_path() / "craftbench_record_tamper";
    const auto result = run_policy(policy, opt);
    ASSERT_EQ(result.records.size(), 1u);
    const auto rec = load_record(result.records[0]);
    std::filesystem::remove_all(opt.record_dir);

    auto r = rec;
    r.rewards[r.length() / 2] += 1.0F;
    EXPECT_FALSE(verify_replay(r, opt.config).ok);
    r = rec;
    r.images[r.images.size() / 2] ^= 1;
    EXPECT_FALSE(verify_replay(r, opt.config).ok);
    r = rec;
    r.dones.back() = 0;
    EXPECT_FALSE(verify_replay(r, opt.config).ok);
    BalanceConfig other;
    other.cow_food = 5;
    const auto report = verify_replay(rec, other);
    EXPECT_FALSE(report.ok);
    EXPECT_EQ(report.steps, 0u);
}
