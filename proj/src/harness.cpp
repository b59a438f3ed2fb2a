#include "craftbench/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "craftbench/env.hpp"
#include "craftbench/error.hpp"

namespace craftbench {

void RandomPolicy::begin_episode(std::uint64_t run_seed, std::uint64_t episode_index) {
    rng_.reseed(stream_seed(derive_episode_seed(run_seed, episode_index), Stream::policy));
}

auto RandomPolicy::act(const Observation &) -> Action {
    return static_cast<Action>(rng_.below(kNumActions));
}

void ScriptPolicy::begin_episode(std::uint64_t, std::uint64_t) {
    cursor_ = 0;
}

auto ScriptPolicy::act(const Observation &) -> Action {
    return cursor_ < script_.size() ? script_[cursor_++] : Action::noop;
}

auto parse_action_script(std::string_view text) -> std::vector<Action> {
    std::vector<Action> out;
    std::istringstream lines{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream words(line);
        std::string word;
        while (words >> word) {
            const auto a = parse_action(word);
            if (!a) {
                throw CraftError(ErrorCode::config_error,
                                 "line " + std::to_string(lineno) + ": unknown action '" + word + "'");
            }
            out.push_back(*a);
        }
    }
    return out;
}

auto load_action_script(const std::filesystem::path &path) -> std::vector<Action> {
    std::ifstream f(path);
    if (!f) {
        throw CraftError(ErrorCode::io_failure, "cannot open " + path.string());
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_action_script(buf.str());
}

auto make_policy(std::string_view spec) -> std::unique_ptr<Policy> {
    if (spec == "random") {
        return std::make_unique<RandomPolicy>();
    }
    constexpr std::string_view prefix = "script:";
    if (spec.starts_with(prefix) && spec.size() > prefix.size()) {
        return std::make_unique<ScriptPolicy>(load_action_script(std::string(spec.substr(prefix.size()))));
    }
    throw CraftError(ErrorCode::invalid_argument, "unknown policy '" + std::string(spec) + "'");
}

auto EpisodeStats::distinct_unlocked() const noexcept -> int {
    return static_cast<int>(std::count_if(achievements.begin(), achievements.end(), [](int c) { return c > 0; }));
}

auto stats_to_json_line(const EpisodeStats &s) -> std::string {
    nlohmann::ordered_json j;
    j["episode_index"] = s.episode_index;
    j["length"] = s.length;
    j["return"] = s.episode_return();
    auto &ach = j["achievements"];
    ach = nlohmann::ordered_json::object();
    for (auto a : all_achievements()) {
        ach[std::string(achievement_name(a))] = s.achievements[static_cast<std::size_t>(a)];
    }
    return j.dump();
}

auto stats_from_json_line(std::string_view line) -> EpisodeStats {
    const auto j = nlohmann::json::parse(line, nullptr, false);
    auto bad = [](const std::string &why) -> CraftError {
        return CraftError(ErrorCode::invalid_record, "invalid stats line: " + why);
    };
    if (j.is_discarded() || !j.is_object()) {
        throw bad("not a JSON object");
    }
    EpisodeStats s;
    try {
        s.episode_index = j.at("episode_index").get<std::uint64_t>();
        s.length = j.at("length").get<int>();
        s.return_tenths = std::llround(j.at("return").get<double>() * 10.0);
        const auto &ach = j.at("achievements");
        for (auto a : all_achievements()) {
            const int n = ach.at(std::string(achievement_name(a))).get<int>();
            if (n < 0) {
                throw bad("negative achievement count");
            }
            s.achievements[static_cast<std::size_t>(a)] = n;
        }
    } catch (const nlohmann::json::exception &e) {
        throw bad(e.what());
    }
    if (s.length < 1) {
        throw bad("episode length must be at least 1");
    }
    return s;
}

auto read_stats(std::istream &in) -> std::vector<EpisodeStats> {
    std::vector<EpisodeStats> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        out.push_back(stats_from_json_line(line));
    }
    return out;
}

auto read_stats(const std::filesystem::path &path) -> std::vector<EpisodeStats> {
    std::ifstream f(path);
    if (!f) {
        throw CraftError(ErrorCode::io_failure, "cannot open " + path.string());
    }
    return read_stats(f);
}

auto run_policy(Policy &policy, const RunOptions &options,
                const std::function<void(const EpisodeStats &)> &on_episode) -> RunResult {
    if (options.budget_steps < 1) {
        throw CraftError(ErrorCode::invalid_argument, "step budget must be at least 1");
    }
    const bool render = options.force_render || options.record_every > 0 || policy.needs_observations();
    Env env(options.config, EnvOptions{.render_observations = render, .semantic_info = false});
    const auto config_hash = options.config.hash();

    RunResult result;
    for (std::uint64_t episode = 0; result.total_steps < options.budget_steps; ++episode) {
        const Observation *obs = &env.reset(options.run_seed, episode);
        policy.begin_episode(options.run_seed, episode);

        const bool recording = options.record_every > 0 && episode % static_cast<std::uint64_t>(options.record_every) == 0;
        EpisodeRecord rec;
        if (recording) {
            rec.run_seed = options.run_seed;
            rec.episode_index = episode;
            rec.config_hash = config_hash;
        }
        while (!env.done()) {
            const Action a = policy.act(*obs);
            const auto &r = env.step(a);
            obs = &r.observation;
            if (recording) {
                rec.append(a, r.reward, r.done, obs);
            }
        }

        EpisodeStats stats;
        stats.episode_index = episode;
        stats.length = env.step_count();
        stats.return_tenths = env.return_tenths();
        stats.achievements = env.achievements().counts();
        const auto ceiling = static_cast<std::int64_t>(std::ceil(stats.episode_return()));
        if (ceiling != stats.distinct_unlocked()) {
            throw CraftError(ErrorCode::invariant_violation,
                             "episode " + std::to_string(episode) + ": ceil(return) = " + std::to_string(ceiling) +
                                 " but " + std::to_string(stats.distinct_unlocked()) + " achievements unlocked");
        }
        result.total_steps += stats.length;
        if (recording) {
            result.records.push_back(save_record(rec, options.record_dir));
        }
        if (on_episode) {
            on_episode(stats);
        }
        result.episodes.push_back(stats);
    }
    return result;
}

auto success_rates(std::span<const EpisodeStats> episodes) -> std::array<double, kNumAchievements> {
    if (episodes.empty()) {
        throw CraftError(ErrorCode::empty_log, "no episodes in log");
    }
    std::array<std::size_t, kNumAchievements> hits{};
    for (const auto &e : episodes) {
        for (std::size_t i = 0; i < hits.size(); ++i) {
            hits[i] += e.achievements[i] > 0 ? 1 : 0;
        }
    }
    std::array<double, kNumAchievements> rates{};
    for (std::size_t i = 0; i < hits.size(); ++i) {
        rates[i] = 100.0 * static_cast<double>(hits[i]) / static_cast<double>(episodes.size());
    }
    return rates;
}

auto compute_score(std::span<const double> rates) -> double {
    if (rates.empty()) {
        throw CraftError(ErrorCode::empty_input, "no success rates given");
    }
    for (double r : rates) {
        if (!(r >= 0.0 && r <= 100.0)) {
            throw CraftError(ErrorCode::rate_out_of_range, "success rate outside [0, 100]: " + std::to_string(r));
        }
    }
    // Equal rates are their own geometric mean; returning them directly keeps
    // the all-0 and all-100 boundaries exact.
    if (std::all_of(rates.begin(), rates.end(), [&](double r) { return r == rates.front(); })) {
        return rates.front();
    }
    double sum = 0.0;
    for (double r : rates) {
        sum += std::log1p(r);
    }
    const double s = std::expm1(sum / static_cast<double>(rates.size()));
    return std::clamp(s, 0.0, 100.0);
}

auto summarize(std::span<const EpisodeStats> episodes, std::uint64_t seed) -> RunSummary {
    RunSummary out;
    out.seed = seed;
    out.episodes = episodes.size();
    out.rates = success_rates(episodes);
    out.score = compute_score(out.rates);
    for (const auto &e : episodes) {
        out.total_steps += e.length;
    }
    const std::int64_t window_start = out.total_steps - kReturnWindow;
    std::int64_t start = 0;
    std::int64_t sum = 0;
    std::size_t n = 0;
    for (const auto &e : episodes) {
        if (start >= window_start) {
            sum += e.return_tenths;
            ++n;
        }
        start += e.length;
    }
    if (n == 0) {
        sum = episodes.back().return_tenths;
        n = 1;
    }
    out.mean_return_last = static_cast<double>(sum) / 10.0 / static_cast<double>(n);
    return out;
}

auto aggregate_runs(std::span<const RunSummary> runs) -> Aggregate {
    if (runs.empty()) {
        throw CraftError(ErrorCode::empty_input, "no runs to aggregate");
    }
    // Sort so the floating-point sums do not depend on input order.
    std::vector<double> scores;
    scores.reserve(runs.size());
    for (const auto &r : runs) {
        scores.push_back(r.score);
    }
    std::sort(scores.begin(), scores.end());
    Aggregate out;
    out.runs = scores.size();
    double sum = 0.0;
    for (double s : scores) {
        sum += s;
    }
    out.mean = sum / static_cast<double>(scores.size());
    if (scores.size() > 1) {
        double ss = 0.0;
        for (double s : scores) {
            ss += (s - out.mean) * (s - out.mean);
        }
        const auto n = static_cast<double>(scores.size());
        out.standard_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return out;
}

auto verify_replay(const EpisodeRecord &rec, const BalanceConfig &config) -> ReplayReport {
    ReplayReport report;
    if (config.hash() != rec.config_hash) {
        report.ok = false;
        report.mismatch = "config hash differs from the recorded one";
        return report;
    }
    Env env(config, EnvOptions{.render_observations = rec.has_images(), .semantic_info = false});
    env.reset(rec.run_seed, rec.episode_index);
    for (std::size_t t = 0; t < rec.length(); ++t) {
        if (env.done()) {
            report.ok = false;
            report.mismatch = "episode ended early at step " + std::to_string(t);
            break;
        }
        const auto &r = env.step(action_from_index(rec.actions[t]));
        ++report.steps;
        std::string what;
        if (static_cast<float>(r.reward) != rec.rewards[t]) {
            what = "reward";
        } else if ((r.done ? 1 : 0) != rec.dones[t]) {
            what = "done flag";
        } else if (rec.has_images() &&
                   std::memcmp(r.observation.data(), rec.image(t).data(), kObsBytes) != 0) {
            what = "observation";
        }
        if (!what.empty()) {
            report.ok = false;
            report.mismatch = what + " differs at step " + std::to_string(t);
            break;
        }
    }
    report.return_tenths = env.return_tenths();
    report.achievements = env.achievements().counts();
    return report;
}

auto measure_throughput(std::int64_t steps, std::uint64_t seed, const BalanceConfig &config) -> Throughput {
    Env env(config, EnvOptions{.render_observations = true, .semantic_info = false});
    RandomPolicy policy;
    std::uint64_t episode = 0;
    const auto start = std::chrono::steady_clock::now();
    env.reset(seed, episode);
    policy.begin_episode(seed, episode);
    for (std::int64_t i = 0; i < steps; ++i) {
        if (env.done()) {
            env.reset(seed, ++episode);
            policy.begin_episode(seed, episode);
        }
        env.step(policy.act(env.observation()));
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {steps, seconds, seconds > 0.0 ? static_cast<double>(steps) / seconds : 0.0};
}

}    // namespace craftbench
