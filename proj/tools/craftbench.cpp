#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "craftbench/error.hpp"
#include "craftbench/harness.hpp"
#include "craftbench/png.hpp"
#include "craftbench/record.hpp"
#include "craftbench/report.hpp"
#include "craftbench/worldgen.hpp"

namespace fs = std::filesystem;
using namespace craftbench;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

auto load_config(const std::string &path) -> BalanceConfig {
    return path.empty() ? BalanceConfig{} : BalanceConfig::load(path);
}

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    f.close();
    if (!f) {
        throw CraftError(ErrorCode::io_failure, "cannot write " + path.string());
    }
}

struct RunArgs {
    std::string policy = "random";
    std::uint64_t seed = 0;
    std::int64_t steps = 1'000'000;
    std::string config;
    std::string out;
    int record_every = 0;
};

auto cmd_run(const RunArgs &args) -> int {
    RunOptions options;
    options.run_seed = args.seed;
    options.budget_steps = args.steps;
    options.config = load_config(args.config);
    options.record_every = args.record_every;
    const fs::path out = args.out;
    options.record_dir = out / "episodes";
    fs::create_directories(out);

    auto policy = make_policy(args.policy);
    std::ofstream stats(out / "stats.jsonl", std::ios::binary);
    if (!stats) {
        throw CraftError(ErrorCode::io_failure, "cannot write " + (out / "stats.jsonl").string());
    }
    const auto result = run_policy(*policy, options, [&](const EpisodeStats &s) { stats << stats_to_json_line(s) << '\n'; });
    stats.close();
    if (!stats) {
        throw CraftError(ErrorCode::io_failure, "cannot write " + (out / "stats.jsonl").string());
    }
    options.config.save(out / "config.txt");

    nlohmann::ordered_json meta;
    meta["seed"] = args.seed;
    meta["policy"] = args.policy;
    meta["budget_steps"] = args.steps;
    meta["total_steps"] = result.total_steps;
    meta["episodes"] = result.episodes.size();
    meta["config_hash"] = options.config.hash();
    write_text(out / "run.json", meta.dump(2) + "\n");

    const auto summary = summarize(result.episodes, args.seed);
    std::printf("%zu episodes, %lld steps, score %.2f%%\n", summary.episodes,
                static_cast<long long>(summary.total_steps), summary.score);
    return kExitOk;
}

auto cmd_score(const std::vector<std::string> &inputs, const std::string &out) -> int {
    std::vector<RunLog> runs;
    for (const auto &in : inputs) {
        runs.push_back(load_run_log(fs::path(in).lexically_normal()));
    }
    const auto files = write_report(runs, out);
    std::ifstream table(files.table);
    std::cout << table.rdbuf();
    return kExitOk;
}

auto cmd_gen(std::uint64_t seed, std::uint64_t episode, const std::string &config_path, const std::string &out,
             const std::string &grid_out) -> int {
    const auto config = load_config(config_path);
    const auto world = generate_world(derive_episode_seed(seed, episode), config);
    write_png(out, render_full_map(world.grid, TextureAtlas::builtin()));
    if (!grid_out.empty()) {
        nlohmann::ordered_json j;
        j["seed"] = seed;
        j["episode"] = episode;
        j["attempts"] = world.attempts;
        j["spawn"] = {world.grid.spawn.x, world.grid.spawn.y};
        auto &rows = j["materials"];
        rows = nlohmann::ordered_json::array();
        for (int y = 0; y < kWorldSize; ++y) {
            std::string row;
            for (int x = 0; x < kWorldSize; ++x) {
                if (x > 0) {
                    row += ' ';
                }
                row += material_name(world.grid.at({x, y}));
            }
            rows.push_back(row);
        }
        write_text(grid_out, j.dump(1) + "\n");
    }
    std::printf("world for seed %llu episode %llu after %d attempt(s)\n", static_cast<unsigned long long>(seed),
                static_cast<unsigned long long>(episode), world.attempts);
    return kExitOk;
}

auto cmd_replay(const std::string &episode_path, const std::string &out, const std::string &config_path) -> int {
    const auto rec = load_record(episode_path);
    const auto config = load_config(config_path);
    const auto report = verify_replay(rec, config);

    nlohmann::ordered_json j;
    j["episode"] = episode_path;
    j["ok"] = report.ok;
    j["mismatch"] = report.mismatch;
    j["steps"] = report.steps;
    j["length"] = rec.length();
    j["return"] = static_cast<double>(report.return_tenths) / 10.0;
    auto &ach = j["achievements"];
    ach = nlohmann::ordered_json::object();
    for (auto a : all_achievements()) {
        ach[std::string(achievement_name(a))] = report.achievements[static_cast<std::size_t>(a)];
    }
    fs::create_directories(out);
    write_text(fs::path(out) / "replay.json", j.dump(2) + "\n");
    if (rec.has_images()) {
        const auto &last = rec.image(rec.length() - 1);
        Observation obs;
        std::copy(last.begin(), last.end(), obs.begin());
        write_png(fs::path(out) / "last_frame.png", observation_image(obs));
    }
    if (!report.ok) {
        std::fprintf(stderr, "replay mismatch: %s\n", report.mismatch.c_str());
        return kExitInvariant;
    }
    std::printf("replay ok: %zu steps, return %.1f\n", report.steps, static_cast<double>(report.return_tenths) / 10.0);
    return kExitOk;
}

auto cmd_bench(std::int64_t steps, std::uint64_t seed) -> int {
    const auto t = measure_throughput(steps, seed, BalanceConfig{});
    std::printf("%lld steps in %.3f s: %.0f steps/s (step + render, 1 thread)\n", static_cast<long long>(t.steps),
                t.seconds, t.steps_per_second);
    return kExitOk;
}

}    // namespace

int main(int argc, char **argv) {
    CLI::App app{"craftbench: survival crafting benchmark environment and evaluation harness"};
    app.require_subcommand(1);

    RunArgs run;
    auto *run_cmd = app.add_subcommand("run", "run a policy for a step budget and log per-episode stats");
    run_cmd->add_option("--policy", run.policy, "random | script:<path>")->capture_default_str();
    run_cmd->add_option("--seed", run.seed, "run seed")->capture_default_str();
    run_cmd->add_option("--steps", run.steps, "step budget")->capture_default_str()->check(CLI::PositiveNumber);
    run_cmd->add_option("--config", run.config, "balance table file")->check(CLI::ExistingFile);
    run_cmd->add_option("--out", run.out, "output directory")->required();
    run_cmd->add_option("--record-video-every", run.record_every, "record every k-th episode with frames")
        ->check(CLI::NonNegativeNumber);

    std::vector<std::string> score_in;
    std::string score_out;
    auto *score_cmd = app.add_subcommand("score", "success rates, score table and charts from run directories");
    score_cmd->add_option("--in", score_in, "run directories, one per seed")->required()->check(CLI::ExistingDirectory);
    score_cmd->add_option("--out", score_out, "report directory")->required();

    std::uint64_t gen_seed = 0;
    std::uint64_t gen_episode = 0;
    std::string gen_out;
    std::string gen_grid;
    std::string gen_config;
    auto *gen_cmd = app.add_subcommand("gen", "render the full map of a generated world");
    gen_cmd->add_option("--seed", gen_seed, "run seed")->required();
    gen_cmd->add_option("--episode", gen_episode, "episode index")->capture_default_str();
    gen_cmd->add_option("--config", gen_config, "balance table file")->check(CLI::ExistingFile);
    gen_cmd->add_option("--out", gen_out, "output PNG")->required();
    gen_cmd->add_option("--grid", gen_grid, "also write the material grid as JSON");

    std::string replay_episode;
    std::string replay_out;
    std::string replay_config;
    auto *replay_cmd = app.add_subcommand("replay", "re-simulate a recorded episode and verify it bit for bit");
    replay_cmd->add_option("--episode", replay_episode, ".crtr file")->required()->check(CLI::ExistingFile);
    replay_cmd->add_option("--out", replay_out, "output directory")->required();
    replay_cmd->add_option("--config", replay_config, "balance table the episode was recorded with")
        ->check(CLI::ExistingFile);

    std::int64_t bench_steps = 200'000;
    std::uint64_t bench_seed = 0;
    auto *bench_cmd = app.add_subcommand("bench", "measure single-thread step + render throughput");
    bench_cmd->add_option("--steps", bench_steps, "steps to time")->capture_default_str()->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_seed, "run seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run_cmd) {
            return cmd_run(run);
        }
        if (*score_cmd) {
            return cmd_score(score_in, score_out);
        }
        if (*gen_cmd) {
            return cmd_gen(gen_seed, gen_episode, gen_config, gen_out, gen_grid);
        }
        if (*replay_cmd) {
            return cmd_replay(replay_episode, replay_out, replay_config);
        }
        if (*bench_cmd) {
            return cmd_bench(bench_steps, bench_seed);
        }
    } catch (const CraftError &e) {
        std::fprintf(stderr, "error (%s): %s\n", error_code_name(e.code()), e.what());
        return e.code() == ErrorCode::invariant_violation ? kExitInvariant : kExitUsage;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
