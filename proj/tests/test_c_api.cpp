#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "craftbench/craftbench_c.h"
#include "craftbench/env.hpp"
#include "craftbench/harness.hpp"

using namespace craftbench;

namespace {

auto decode_info(const std::vector<std::uint8_t> &buf, std::size_t len) -> nlohmann::json {
    EXPECT_GE(len, 4u);
    const std::uint32_t n = buf[0] | buf[1] << 8 | buf[2] << 16 | static_cast<std::uint32_t>(buf[3]) << 24;
    EXPECT_EQ(n + 4u, len);
    return nlohmann::json::parse(buf.begin() + 4, buf.begin() + static_cast<std::ptrdiff_t>(len));
}

}    // namespace

TEST(CApi, LifecycleMatchesNativeEnv) {
    for (std::uint64_t seed : {0, 1, 2}) {
        crafter_env *h = nullptr;
        ASSERT_EQ(crafter_create(seed, nullptr, &h), CRAFTER_OK);
        ASSERT_NE(h, nullptr);
        Env native;
        RandomPolicy policy;
        std::vector<std::uint8_t> obs(CRAFTER_OBS_BYTES);
        std::vector<std::uint8_t> info(64 * 1024);
        std::uint64_t episode = 0;
        ASSERT_EQ(crafter_reset(h, obs.data()), CRAFTER_OK);
        native.reset(seed, episode);
        policy.begin_episode(seed, episode);
        ASSERT_EQ(std::memcmp(obs.data(), native.observation().data(), CRAFTER_OBS_BYTES), 0);
        for (int t = 0; t < 1000; ++t) {
            const auto a = policy.act(native.observation());
            float reward = 0.0F;
            std::uint8_t done = 0;
            std::size_t len = 0;
            ASSERT_EQ(crafter_step(h, static_cast<int>(a), obs.data(), &reward, &done, info.data(), info.size(), &len),
                      CRAFTER_OK);
            const auto &r = native.step(a);
            ASSERT_EQ(std::memcmp(obs.data(), r.observation.data(), CRAFTER_OBS_BYTES), 0) << "step " << t;
            ASSERT_EQ(reward, static_cast<float>(r.reward));
            ASSERT_EQ(done != 0, r.done);
            const auto j = decode_info(info, len);
            ASSERT_EQ(j["step"].get<int>(), r.info.step);
            ASSERT_EQ(j["discount"].get<double>(), r.info.discount);
            ASSERT_EQ(j["vitals"]["health"].get<int>(), r.info.vitals[0]);
            ASSERT_EQ(j["player_pos"][0].get<int>(), r.info.player_pos.x);
            ASSERT_EQ(j["semantic"].size(), static_cast<std::size_t>(kNumCells));
            ASSERT_EQ(j["achievements"].size(), static_cast<std::size_t>(kNumAchievements));
            if (done != 0) {
                ASSERT_EQ(crafter_reset(h, obs.data()), CRAFTER_OK);
                native.reset(seed, ++episode);
                policy.begin_episode(seed, episode);
            }
        }
        EXPECT_EQ(crafter_close(h), CRAFTER_OK);
    }
}

TEST(CApi, SemanticGridIsRowMajorMaterials) {
    crafter_env *h = nullptr;
    ASSERT_EQ(crafter_create(5, nullptr, &h), CRAFTER_OK);
    ASSERT_EQ(crafter_reset(h, nullptr), CRAFTER_OK);
    std::size_t len = 0;
    ASSERT_EQ(crafter_last_info(h, nullptr, 0, &len), CRAFTER_OK);
    std::vector<std::uint8_t> info(len);
    ASSERT_EQ(crafter_last_info(h, info.data(), info.size(), &len), CRAFTER_OK);
    const auto j = decode_info(info, len);
    Env native;
    native.reset(5, 0);
    for (int i = 0; i < kNumCells; ++i) {
        ASSERT_EQ(j["semantic"][static_cast<std::size_t>(i)].get<int>(),
                  static_cast<int>(native.state().grid()[static_cast<std::size_t>(i)]));
    }
    EXPECT_EQ(j["step"].get<int>(), 0);
    crafter_close(h);
}

TEST(CApi, ErrorCodes) {
    EXPECT_EQ(crafter_create(0, nullptr, nullptr), CRAFTER_INVALID_ARGUMENT);
    crafter_env *h = nullptr;
    EXPECT_EQ(crafter_create(0, "/nonexistent/balance.txt", &h), CRAFTER_IO_FAILURE);
    EXPECT_EQ(h, nullptr);
    EXPECT_NE(std::string(crafter_last_error()).find("balance.txt"), std::string::npos);

    EXPECT_EQ(crafter_reset(nullptr, nullptr), CRAFTER_INVALID_HANDLE);
    EXPECT_EQ(crafter_step(nullptr, 0, nullptr, nullptr, nullptr, nullptr, 0, nullptr), CRAFTER_INVALID_HANDLE);
    EXPECT_EQ(crafter_last_info(nullptr, nullptr, 0, nullptr), CRAFTER_INVALID_HANDLE);
    EXPECT_EQ(crafter_close(nullptr), CRAFTER_OK);

    ASSERT_EQ(crafter_create(0, nullptr, &h), CRAFTER_OK);
    EXPECT_EQ(crafter_step(h, 0, nullptr, nullptr, nullptr, nullptr, 0, nullptr), CRAFTER_NOT_RESET);
    EXPECT_EQ(crafter_last_info(h, nullptr, 0, nullptr), CRAFTER_NOT_RESET);
    ASSERT_EQ(crafter_reset(h, nullptr), CRAFTER_OK);
    EXPECT_EQ(crafter_step(h, 17, nullptr, nullptr, nullptr, nullptr, 0, nullptr), CRAFTER_INVALID_ACTION_INDEX);
    EXPECT_EQ(crafter_step(h, -3, nullptr, nullptr, nullptr, nullptr, 0, nullptr), CRAFTER_INVALID_ACTION_INDEX);
    EXPECT_NE(std::string(crafter_last_error()), "");
    crafter_close(h);

    // Config errors surface with their own code.
    const auto path = std::filesystem::temp_directory_path() / "craftbench_c_api_bad.txt";
    {
        std::FILE *f = std::fopen(path.c_str(), "w");
        std::fputs("food_period = -4\n", f);
        std::fclose(f);
    }
    EXPECT_EQ(crafter_create(0, path.c_str(), &h), CRAFTER_CONFIG_ERROR);
    std::filesystem::remove(path);
}

TEST(CApi, SteppingAfterDone) {
    const auto path = std::filesystem::temp_directory_path() / "craftbench_c_api_short.txt";
    {
        std::FILE *f = std::fopen(path.c_str(), "w");
        std::fputs("time_limit = 3\n", f);
        std::fclose(f);
    }
    crafter_env *h = nullptr;
    ASSERT_EQ(crafter_create(0, path.c_str(), &h), CRAFTER_OK);
    std::filesystem::remove(path);
    ASSERT_EQ(crafter_reset(h, nullptr), CRAFTER_OK);
    std::uint8_t done = 0;
    for (int t = 0; t < 3; ++t) {
        ASSERT_EQ(crafter_step(h, 0, nullptr, nullptr, &done, nullptr, 0, nullptr), CRAFTER_OK);
    }
    EXPECT_EQ(done, 1);
    EXPECT_EQ(crafter_step(h, 0, nullptr, nullptr, &done, nullptr, 0, nullptr), CRAFTER_STEPPED_AFTER_DONE);
    // Reset moves on to the next episode index.
    std::vector<std::uint8_t> obs(CRAFTER_OBS_BYTES);
    ASSERT_EQ(crafter_reset(h, obs.data()), CRAFTER_OK);
    Env native;
    native.reset(0, 1);
    EXPECT_EQ(std::memcmp(obs.data(), native.observation().data(), CRAFTER_OBS_BYTES), 0);
    crafter_close(h);
}

TEST(CApi, SmallInfoBufferStillSteps) {
    crafter_env *h = nullptr;
    ASSERT_EQ(crafter_create(3, nullptr, &h), CRAFTER_OK);
    ASSERT_EQ(crafter_reset(h, nullptr), CRAFTER_OK);
    std::vector<std::uint8_t> small(16);
    std::size_t len = 0;
    float reward = -1.0F;
    std::vector<std::uint8_t> obs(CRAFTER_OBS_BYTES);
    EXPECT_EQ(crafter_step(h, 1, obs.data(), &reward, nullptr, small.data(), small.size(), &len),
              CRAFTER_BUFFER_TOO_SMALL);
    EXPECT_GT(len, small.size());
    EXPECT_NE(reward, -1.0F);
    std::vector<std::uint8_t> big(len);
    ASSERT_EQ(crafter_last_info(h, big.data(), big.size(), &len), CRAFTER_OK);
    EXPECT_EQ(decode_info(big, len)["step"].get<int>(), 1);
    crafter_close(h);
}
