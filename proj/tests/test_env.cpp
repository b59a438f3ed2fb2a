#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "craftbench/env.hpp"
#include "craftbench/error.hpp"
#include "craftbench/harness.hpp"

using namespace craftbench;

namespace {

auto golden_script() -> std::vector<Action> {
    return load_action_script(std::filesystem::path(CRAFTBENCH_TEST_DATA) / "golden_seed0.txt");
}

auto error_code_of(const std::function<void()> &f) -> ErrorCode {
    try {
        f();
    } catch (const CraftError &e) {
        return e.code();
    }
    return ErrorCode::ok;
}

// A world where standing still is safe: no decay, idle monsters, no spawns.
auto quiet_config() -> BalanceConfig {
    BalanceConfig cfg;
    cfg.food_period = 1000000;
    cfg.water_period = 1000000;
    cfg.energy_period = 1000000;
    cfg.spawn_probability = 0.0;
    cfg.zombie_chase_probability = 0.0;
    cfg.zombie_move_probability = 0.0;
    cfg.skeleton_shoot_probability = 0.0;
    cfg.skeleton_move_probability = 0.0;
    cfg.skeleton_approach_probability = 0.0;
    cfg.skeleton_retreat_probability = 0.0;
    return cfg;
}

}    // namespace

TEST(Env, RewardFormula) {
    EXPECT_EQ(compute_step_reward(0, 0), 0.0);
    EXPECT_EQ(compute_step_reward(1, -2), 0.8);
    EXPECT_EQ(compute_step_reward(3, 0), 3.0);
    EXPECT_EQ(step_reward_tenths(1, -2), 8);
    EXPECT_EQ(step_reward_tenths(0, -9), -9);
}

TEST(Env, ResetIsDeterministic) {
    Env a;
    Env b;
    EXPECT_EQ(a.reset(4, 2), b.reset(4, 2));
    EXPECT_EQ(a.state(), b.state());
    Env c;
    c.reset(4, 3);
    EXPECT_NE(a.state().grid(), c.state().grid());
    c.reset(5, 2);
    EXPECT_NE(a.state().grid(), c.state().grid());
}

TEST(Env, ResetInfoStartsClean) {
    Env env;
    env.reset(0, 0);
    const auto &info = env.last().info;
    for (int v : info.inventory) {
        EXPECT_EQ(v, 0);
    }
    for (int v : info.vitals) {
        EXPECT_EQ(v, kMaxLevel);
    }
    EXPECT_EQ(info.vitals[static_cast<std::size_t>(Vital::health)], 9);
    EXPECT_EQ(info.achievements.distinct_unlocked(), 0);
    EXPECT_EQ(info.step, 0);
    EXPECT_EQ(info.discount, 1.0);
    EXPECT_EQ(env.return_tenths(), 0);
    EXPECT_FALSE(env.done());
}

TEST(Env, ReusingEnvAcrossEpisodesMatchesFreshEnv) {
    Env reused(BalanceConfig{}, EnvOptions{.render_observations = true, .semantic_info = false});
    Env fresh(BalanceConfig{}, EnvOptions{.render_observations = true, .semantic_info = false});
    Rng rng(1);
    reused.reset(1, 0);
    for (int t = 0; t < 200 && !reused.done(); ++t) {
        reused.step(static_cast<int>(rng.below(kNumActions)));
    }
    reused.reset(1, 1);
    fresh.reset(1, 1);
    EXPECT_EQ(reused.state(), fresh.state());
    EXPECT_EQ(reused.observation(), fresh.observation());
    EXPECT_EQ(reused.achievements(), fresh.achievements());
    EXPECT_EQ(reused.step_count(), 0);
}

TEST(Env, FirstUnlockIsRewardedOnce) {
    Env env;
    env.reset(0, 0);
    int wood_steps = 0;
    for (auto a : golden_script()) {
        const int health_before = env.state().player().health();
        const auto &r = env.step(a);
        const int health_delta = env.state().player().health() - health_before;
        bool wood = false;
        for (const auto &e : r.info.events) {
            wood = wood || e == Event{EventKind::collected, Subject::wood};
        }
        if (!wood) {
            continue;
        }
        ++wood_steps;
        EXPECT_EQ(r.reward, compute_step_reward(static_cast<int>(r.info.unlocked.size()), health_delta));
        if (wood_steps == 1) {
            ASSERT_FALSE(r.info.unlocked.empty());
            EXPECT_NE(std::find(r.info.unlocked.begin(), r.info.unlocked.end(), Achievement::collect_wood),
                      r.info.unlocked.end());
        } else {
            EXPECT_EQ(std::find(r.info.unlocked.begin(), r.info.unlocked.end(), Achievement::collect_wood),
                      r.info.unlocked.end());
        }
        if (wood_steps == 2) {
            break;
        }
    }
    EXPECT_EQ(wood_steps, 2);
    EXPECT_EQ(env.achievements().count(Achievement::collect_wood), 2);
}

TEST(Env, GoldenScriptUnlocksEverything) {
    Env env(BalanceConfig{}, EnvOptions{.render_observations = false, .semantic_info = false});
    env.reset(0, 0);
    std::int64_t sum = 0;
    for (auto a : golden_script()) {
        ASSERT_FALSE(env.done());
        const auto &r = env.step(a);
        sum += std::llround(r.reward * 10.0);
    }
    EXPECT_EQ(env.achievements().distinct_unlocked(), kNumAchievements);
    EXPECT_EQ(sum, env.return_tenths());
    EXPECT_EQ(env.return_tenths(), 10 * kNumAchievements + env.state().player().health() - kMaxLevel);
}

TEST(Env, EpisodeEndsAtTimeLimit) {
    Env env(quiet_config(), EnvOptions{.render_observations = false, .semantic_info = false});
    env.reset(2, 0);
    for (int t = 1; t <= 10000; ++t) {
        const auto &r = env.step(Action::noop);
        ASSERT_EQ(r.done, t == 10000) << t;
        ASSERT_GT(env.state().player().health(), 0);
    }
    EXPECT_EQ(env.last().info.discount, 1.0);
    EXPECT_EQ(env.step_count(), 10000);
    EXPECT_EQ(error_code_of([&] { env.step(Action::noop); }), ErrorCode::stepped_after_done);
}

TEST(Env, DeathEndsEpisodeWithZeroDiscount) {
    // Starving at maximum speed.
    BalanceConfig cfg;
    cfg.food_period = 1;
    cfg.water_period = 1;
    cfg.damage_period = 1;
    Env env(cfg, EnvOptions{.render_observations = false, .semantic_info = false});
    env.reset(0, 0);
    int t = 0;
    while (!env.done()) {
        const auto &r = env.step(Action::noop);
        ++t;
        if (!r.done) {
            ASSERT_EQ(r.info.discount, 1.0);
        }
    }
    EXPECT_EQ(env.state().player().health(), 0);
    EXPECT_EQ(env.last().info.discount, 0.0);
    EXPECT_LT(t, 100);
    EXPECT_EQ(env.return_tenths(), -kMaxLevel);
}

TEST(Env, Errors) {
    Env env;
    EXPECT_EQ(error_code_of([&] { env.step(Action::noop); }), ErrorCode::not_reset);
    env.reset(0, 0);
    EXPECT_EQ(error_code_of([&] { env.step(17); }), ErrorCode::invalid_action_index);
    EXPECT_EQ(error_code_of([&] { env.step(-1); }), ErrorCode::invalid_action_index);
    EXPECT_EQ(env.step_count(), 0);
    EXPECT_EQ(error_code_of([&] { env.step(16); }), ErrorCode::ok);
    BalanceConfig bad;
    bad.day_length = 0;
    EXPECT_EQ(error_code_of([&] { Env e(bad); }), ErrorCode::config_error);
}

TEST(Env, InfoMirrorsState) {
    Env env;
    env.reset(6, 0);
    Rng rng(2);
    for (int t = 0; t < 500 && !env.done(); ++t) {
        const auto &r = env.step(static_cast<int>(rng.below(kNumActions)));
        const auto &s = env.state();
        ASSERT_EQ(r.info.semantic, s.grid());
        ASSERT_EQ(r.info.inventory, s.player().inventory);
        ASSERT_EQ(r.info.vitals, s.player().vitals);
        ASSERT_EQ(r.info.player_pos, s.player().pos);
        ASSERT_EQ(r.info.facing, s.player().facing);
        ASSERT_EQ(r.info.step, t + 1);
        ASSERT_EQ(r.info.day_tick, s.day_tick());
        ASSERT_EQ(r.info.achievements, env.achievements());
    }
}

TEST(Env, AchievementsAreExactlyTheEventImage) {
    Env env(BalanceConfig{}, EnvOptions{.render_observations = false, .semantic_info = false});
    Rng rng(3);
    for (std::uint64_t ep = 0; ep < 50; ++ep) {
        env.reset(9, ep);
        AchievementSet mine;
        std::int64_t tenths = 0;
        while (!env.done()) {
            const int before = env.state().player().health();
            const auto &r = env.step(static_cast<int>(rng.below(kNumActions)));
            int fresh = 0;
            for (const auto &e : r.info.events) {
                if (const auto a = achievement_for(e)) {
                    fresh += mine.record(*a) ? 1 : 0;
                }
            }
            ASSERT_EQ(fresh, static_cast<int>(r.info.unlocked.size()));
            tenths += step_reward_tenths(fresh, env.state().player().health() - before);
        }
        ASSERT_EQ(mine, env.achievements());
        ASSERT_EQ(tenths, env.return_tenths());
        // Each unlock is worth one unit; health starts at 9 and ends at 0 on death.
        ASSERT_LE(env.return_tenths(), 10 * kNumAchievements);
    }
}

TEST(Env, RenderingDoesNotChangeDynamics) {
    Env drawn(BalanceConfig{}, EnvOptions{.render_observations = true, .semantic_info = true});
    Env blind(BalanceConfig{}, EnvOptions{.render_observations = false, .semantic_info = false});
    drawn.reset(7, 0);
    blind.reset(7, 0);
    Rng rng(4);
    for (int t = 0; t < 2000 && !drawn.done(); ++t) {
        const auto a = static_cast<int>(rng.below(kNumActions));
        const auto &r1 = drawn.step(a);
        const auto &r2 = blind.step(a);
        ASSERT_EQ(r1.reward, r2.reward);
        ASSERT_EQ(r1.done, r2.done);
        ASSERT_EQ(drawn.state().grid(), blind.state().grid());
        ASSERT_EQ(drawn.state().creatures(), blind.state().creatures());
        ASSERT_EQ(drawn.state().player(), blind.state().player());
    }
}
