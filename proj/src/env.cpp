#include "craftbench/env.hpp"

#include "craftbench/error.hpp"
#include "craftbench/rng.hpp"
#include "craftbench/worldgen.hpp"

namespace craftbench {

auto compute_step_reward(int newly_unlocked, int health_delta) -> double {
    return static_cast<double>(step_reward_tenths(newly_unlocked, health_delta)) / 10.0;
}

Env::Env(BalanceConfig config, EnvOptions options)
    : config_(std::move(config)), options_(options), atlas_(&TextureAtlas::builtin()) {
    config_.validate();
    events_.reserve(16);
}

auto Env::reset(std::uint64_t run_seed, std::uint64_t episode_index) -> const Observation & {
    const auto seed = derive_episode_seed(run_seed, episode_index);
    const auto world = generate_world(seed, config_);
    state_ = make_world_state(world, seed, config_);
    achievements_.clear();
    run_seed_ = run_seed;
    episode_index_ = episode_index;
    return_tenths_ = 0;
    steps_ = 0;
    started_ = true;
    done_ = false;

    result_.reward = 0.0;
    result_.done = false;
    events_.clear();
    result_.info.unlocked.clear();
    fill_info();
    if (options_.render_observations) {
        render_observation(state_, config_, *atlas_, result_.observation);
    } else {
        result_.observation.fill(0);
    }
    return result_.observation;
}

auto Env::step(int action_index) -> const StepResult & {
    return step(action_from_index(action_index));
}

auto Env::step(Action action) -> const StepResult & {
    if (!started_) {
        throw CraftError(ErrorCode::not_reset, "step called before reset");
    }
    if (done_) {
        throw CraftError(ErrorCode::stepped_after_done, "episode is over; call reset");
    }
    const int health_before = state_.player().health();
    events_.clear();

    apply_action(state_, action, config_, events_);
    tick_entities(state_, config_, events_);
    tick_vitals(state_, config_, events_);
    balance_spawns(state_, config_);
    advance_daylight(state_, config_, events_);
    ++steps_;

    auto &unlocked = result_.info.unlocked;
    unlocked.clear();
    for (const auto &e : events_) {
        if (const auto a = achievement_for(e); a && achievements_.record(*a)) {
            unlocked.push_back(*a);
        }
    }
    const int health_delta = state_.player().health() - health_before;
    const int tenths = step_reward_tenths(static_cast<int>(unlocked.size()), health_delta);
    return_tenths_ += tenths;

    const bool dead = state_.player().health() == 0;
    done_ = dead || steps_ >= config_.time_limit;
    result_.reward = static_cast<double>(tenths) / 10.0;
    result_.done = done_;
    fill_info();
    result_.info.discount = dead ? 0.0 : 1.0;
    if (options_.render_observations) {
        render_observation(state_, config_, *atlas_, result_.observation);
    }
    return result_;
}

void Env::fill_info() {
    auto &info = result_.info;
    const auto &p = state_.player();
    info.inventory = p.inventory;
    info.vitals = p.vitals;
    info.achievements = achievements_;
    info.player_pos = p.pos;
    info.facing = p.facing;
    info.sleeping = p.sleeping;
    info.step = steps_;
    info.day_tick = state_.day_tick();
    info.discount = 1.0;
    if (options_.semantic_info) {
        info.semantic = state_.grid();
    }
    info.events = events_;
}

}    // namespace craftbench
