#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "craftbench/harness.hpp"
#include "craftbench/render.hpp"

namespace craftbench {

// One seed's stats log and the label it is reported under.
struct RunLog {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<EpisodeStats> episodes;
};

// Plain-text table: one row per achievement with its title and a
// percentage column per run, then per-run scores and the aggregate.
auto format_score_table(std::span<const RunLog> runs) -> std::string;

// Success rates on a log axis, one bar per run side by side for every
// achievement. A zero rate is drawn as a stub at the axis floor.
auto render_spectrum_chart(std::span<const RunLog> runs) -> Image;

// Episode return (moving average) against environment steps, one line per run.
auto render_reward_curve(std::span<const RunLog> runs) -> Image;

auto summary_json(std::span<const RunLog> runs) -> std::string;

struct ReportFiles {
    std::filesystem::path table;
    std::filesystem::path spectrum;
    std::filesystem::path reward_curve;
    std::filesystem::path summary;
};

// Writes scores.txt, spectrum.png, reward_curve.png and summary.json.
// Throws CraftError(empty_input) without runs and CraftError(io_failure).
auto write_report(std::span<const RunLog> runs, const std::filesystem::path &out_dir) -> ReportFiles;

// Reads <dir>/stats.jsonl and the seed from <dir>/run.json when present.
auto load_run_log(const std::filesystem::path &dir) -> RunLog;

}    // namespace craftbench
