#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "craftbench/actions.hpp"
#include "craftbench/config.hpp"
#include "craftbench/record.hpp"
#include "craftbench/render.hpp"
#include "craftbench/rng.hpp"

namespace craftbench {

// A policy sees the rendered observation and nothing else. The signature is
// the privileged-information boundary: no Info, no WorldState.
class Policy {
public:
    virtual ~Policy() = default;

    virtual void begin_episode(std::uint64_t run_seed, std::uint64_t episode_index) = 0;
    virtual auto act(const Observation &obs) -> Action = 0;
    // False lets the harness skip rendering entirely.
    virtual auto needs_observations() const noexcept -> bool { return true; }
};

// Uniform over all 17 actions, seeded per episode from the policy stream.
class RandomPolicy final : public Policy {
public:
    void begin_episode(std::uint64_t run_seed, std::uint64_t episode_index) override;
    auto act(const Observation &obs) -> Action override;
    auto needs_observations() const noexcept -> bool override { return false; }

private:
    Rng rng_;
};

// Replays a fixed action list from the start of every episode, then noops.
class ScriptPolicy final : public Policy {
public:
    explicit ScriptPolicy(std::vector<Action> script) : script_(std::move(script)) {}

    void begin_episode(std::uint64_t run_seed, std::uint64_t episode_index) override;
    auto act(const Observation &obs) -> Action override;
    auto needs_observations() const noexcept -> bool override { return false; }

    auto script() const noexcept -> const std::vector<Action> & { return script_; }

private:
    std::vector<Action> script_;
    std::size_t cursor_ = 0;
};

// Whitespace-separated action indices or names; '#' starts a comment.
// Throws CraftError(config_error) on unknown tokens, io_failure on I/O.
auto parse_action_script(std::string_view text) -> std::vector<Action>;
auto load_action_script(const std::filesystem::path &path) -> std::vector<Action>;

// "random" or "script:<path>". Throws CraftError(invalid_argument).
auto make_policy(std::string_view spec) -> std::unique_ptr<Policy>;

struct EpisodeStats {
    std::uint64_t episode_index = 0;
    int length = 0;
    // Exact return in tenths of a reward unit.
    std::int64_t return_tenths = 0;
    std::array<int, kNumAchievements> achievements{};

    auto episode_return() const noexcept -> double { return static_cast<double>(return_tenths) / 10.0; }
    auto distinct_unlocked() const noexcept -> int;

    auto operator==(const EpisodeStats &) const noexcept -> bool = default;
};

// One JSON object per line, fixed field order:
// {"episode_index", "length", "return", "achievements": {name: count, ...}}.
auto stats_to_json_line(const EpisodeStats &s) -> std::string;
// Throws CraftError(invalid_record).
auto stats_from_json_line(std::string_view line) -> EpisodeStats;
auto read_stats(std::istream &in) -> std::vector<EpisodeStats>;
auto read_stats(const std::filesystem::path &path) -> std::vector<EpisodeStats>;

struct RunOptions {
    std::uint64_t run_seed = 0;
    std::int64_t budget_steps = 1'000'000;
    BalanceConfig config;
    // Record every k-th episode (index % k == 0) with images; 0 disables.
    int record_every = 0;
    std::filesystem::path record_dir;
    // Render even if the policy does not need observations.
    bool force_render = false;
};

struct RunResult {
    std::vector<EpisodeStats> episodes;
    std::int64_t total_steps = 0;
    std::vector<std::filesystem::path> records;
};

// Runs whole episodes until the step budget is reached; the episode in
// flight at the boundary is completed. Checks the return ceiling after each
// episode and throws CraftError(invariant_violation) if it fails.
auto run_policy(Policy &policy, const RunOptions &options,
                const std::function<void(const EpisodeStats &)> &on_episode = {}) -> RunResult;

// Percent of episodes with each achievement unlocked at least once.
// Throws CraftError(empty_log).
auto success_rates(std::span<const EpisodeStats> episodes) -> std::array<double, kNumAchievements>;

// exp(mean(ln(1 + s_i))) - 1 over the given rates, in percent.
// Throws CraftError(rate_out_of_range) for rates outside [0, 100] and
// CraftError(empty_input) for an empty span.
auto compute_score(std::span<const double> rates) -> double;

struct RunSummary {
    std::uint64_t seed = 0;
    std::size_t episodes = 0;
    std::int64_t total_steps = 0;
    std::array<double, kNumAchievements> rates{};
    double score = 0.0;
    // Mean return of the episodes that start within the final window steps;
    // falls back to the last episode when the window holds none.
    double mean_return_last = 0.0;
};

inline constexpr std::int64_t kReturnWindow = 100'000;

auto summarize(std::span<const EpisodeStats> episodes, std::uint64_t seed) -> RunSummary;

struct Aggregate {
    double mean = 0.0;
    // Standard error of the mean over seeds; 0 for a single seed.
    double standard_error = 0.0;
    std::size_t runs = 0;
};

// Throws CraftError(empty_input).
auto aggregate_runs(std::span<const RunSummary> runs) -> Aggregate;

struct ReplayReport {
    bool ok = true;
    std::size_t steps = 0;
    std::int64_t return_tenths = 0;
    std::array<int, kNumAchievements> achievements{};
    std::string mismatch;
};

// Re-simulates a record and compares rewards, dones and, when present,
// images bit for bit. A config whose hash differs from the record's is
// reported as a mismatch without simulating.
auto verify_replay(const EpisodeRecord &rec, const BalanceConfig &config) -> ReplayReport;

struct Throughput {
    std::int64_t steps = 0;
    double seconds = 0.0;
    double steps_per_second = 0.0;
};

// Uniform-random actions with full observation rendering on one thread,
// resetting as episodes end. Reset time is included.
auto measure_throughput(std::int64_t steps, std::uint64_t seed, const BalanceConfig &config) -> Throughput;

}    // namespace craftbench
