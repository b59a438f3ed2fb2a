#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "craftbench/actions.hpp"
#include "craftbench/render.hpp"

namespace craftbench {

// One episode as stored in a .crtr file. images holds the observation after
// each step (the reset frame is not stored), row-major, kObsBytes each.
struct EpisodeRecord {
    std::uint64_t run_seed = 0;
    std::uint64_t episode_index = 0;
    std::uint64_t config_hash = 0;
    std::vector<std::uint8_t> actions;
    std::vector<float> rewards;
    std::vector<std::uint8_t> dones;
    std::vector<std::uint8_t> images;

    auto length() const noexcept -> std::size_t { return actions.size(); }
    auto has_images() const noexcept -> bool { return !images.empty(); }
    auto image(std::size_t t) const noexcept -> std::span<const std::uint8_t, kObsBytes> {
        return std::span<const std::uint8_t, kObsBytes>(images.data() + t * kObsBytes, kObsBytes);
    }

    void append(Action action, double reward, bool done, const Observation *obs = nullptr);

    auto operator==(const EpisodeRecord &) const noexcept -> bool = default;
};

inline constexpr std::uint8_t kRecordVersion = 1;

// Container layout: "CRTR", version byte, u32 LE header length, JSON header
// {length, has_images, run_seed, episode_index, config_hash}, then actions
// (T bytes), rewards (T f32 LE), dones (T bytes), optional images.
auto encode_record(const EpisodeRecord &rec) -> std::vector<std::uint8_t>;

// Throws CraftError(invalid_record) on any structural problem.
auto decode_record(std::span<const std::uint8_t> bytes) -> EpisodeRecord;

// "episode-{index}-{length}.crtr"
auto record_filename(const EpisodeRecord &rec) -> std::string;

// Writes into `dir` under record_filename(); returns the path.
// Throws CraftError(io_failure).
auto save_record(const EpisodeRecord &rec, const std::filesystem::path &dir) -> std::filesystem::path;
auto load_record(const std::filesystem::path &path) -> EpisodeRecord;

}    // namespace craftbench
