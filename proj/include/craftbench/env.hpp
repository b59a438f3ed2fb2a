#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "craftbench/actions.hpp"
#include "craftbench/atlas.hpp"
#include "craftbench/config.hpp"
#include "craftbench/render.hpp"
#include "craftbench/sim.hpp"
#include "craftbench/world.hpp"

namespace craftbench {

// Privileged per-step information. Agents must not read it; it exists for
// logging, debugging and evaluation.
struct Info {
    std::array<int, kNumItems> inventory{};
    std::array<int, kNumVitals> vitals{};
    AchievementSet achievements;
    Pos player_pos;
    Direction facing = Direction::south;
    bool sleeping = false;
    int step = 0;
    int day_tick = 0;
    // 0 when the episode ended in death, 1 otherwise (including time-limit truncation).
    double discount = 1.0;
    std::array<Material, kNumCells> semantic{};
    // Achievements unlocked for the first time on this step.
    std::vector<Achievement> unlocked;
    EventList events;
};

struct StepResult {
    Observation observation{};
    double reward = 0.0;
    bool done = false;
    Info info;
};

// reward = newly_unlocked + 0.1 * health_delta
auto compute_step_reward(int newly_unlocked, int health_delta) -> double;

// The same reward in exact tenths, used for return bookkeeping.
constexpr auto step_reward_tenths(int newly_unlocked, int health_delta) noexcept -> int {
    return 10 * newly_unlocked + health_delta;
}

struct EnvOptions {
    // Skip rasterization; observations stay zero. Simulation results are
    // unaffected because rendering only draws from its own RNG stream.
    bool render_observations = true;
    // Copy the semantic grid into every Info.
    bool semantic_info = true;
};

// One episode at a time: reset, then step until done.
class Env {
public:
    explicit Env(BalanceConfig config = {}, EnvOptions options = {});

    // Throws CraftError(retry_exhausted) from world generation.
    auto reset(std::uint64_t run_seed, std::uint64_t episode_index) -> const Observation &;

    // Throws CraftError(not_reset) before the first reset and
    // CraftError(stepped_after_done) once the episode has ended.
    auto step(Action action) -> const StepResult &;
    // Throws CraftError(invalid_action_index) outside 0..16.
    auto step(int action_index) -> const StepResult &;

    auto config() const noexcept -> const BalanceConfig & { return config_; }
    auto state() const noexcept -> const WorldState & { return state_; }
    auto observation() const noexcept -> const Observation & { return result_.observation; }
    auto last() const noexcept -> const StepResult & { return result_; }
    auto achievements() const noexcept -> const AchievementSet & { return achievements_; }
    auto step_count() const noexcept -> int { return steps_; }
    auto done() const noexcept -> bool { return done_; }
    auto is_reset() const noexcept -> bool { return started_; }
    auto run_seed() const noexcept -> std::uint64_t { return run_seed_; }
    auto episode_index() const noexcept -> std::uint64_t { return episode_index_; }
    // Episode return so far, exact in tenths.
    auto return_tenths() const noexcept -> std::int64_t { return return_tenths_; }
    auto episode_return() const noexcept -> double { return static_cast<double>(return_tenths_) / 10.0; }

private:
    void fill_info();

    BalanceConfig config_;
    EnvOptions options_;
    const TextureAtlas *atlas_;
    WorldState state_;
    AchievementSet achievements_;
    StepResult result_;
    EventList events_;
    std::uint64_t run_seed_ = 0;
    std::uint64_t episode_index_ = 0;
    std::int64_t return_tenths_ = 0;
    int steps_ = 0;
    bool started_ = false;
    bool done_ = false;
};

}    // namespace craftbench
