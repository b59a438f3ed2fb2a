#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "craftbench/config.hpp"
#include "craftbench/types.hpp"
#include "craftbench/world.hpp"

namespace craftbench {

enum class Region : std::uint8_t { grassland, shore, lake, mountain };

struct InitialCreature {
    CreatureKind kind;
    Pos pos;

    auto operator==(const InitialCreature &) const noexcept -> bool = default;
};

struct WorldGrid {
    std::array<Material, kNumCells> cells{};
    std::array<Region, kNumCells> regions{};
    // Cave and tunnel floor, where skeletons live.
    std::array<std::uint8_t, kNumCells> caves{};
    Pos spawn;

    auto at(Pos p) const noexcept -> Material { return cells[static_cast<std::size_t>(cell_index(p))]; }
    auto operator==(const WorldGrid &) const noexcept -> bool = default;
};

struct GeneratedWorld {
    WorldGrid grid;
    std::vector<InitialCreature> creatures;
    // Number of candidate worlds synthesized before one passed validation.
    int attempts = 1;

    auto operator==(const GeneratedWorld &) const noexcept -> bool = default;
};

// Pure function of (episode_seed, config). Re-rolls worlds that miss a
// required material or have no diamond reachable from spawn; throws
// CraftError(retry_exhausted) after config.worldgen_max_attempts.
auto generate_world(std::uint64_t episode_seed, const BalanceConfig &config) -> GeneratedWorld;

// Single synthesis pass without validation.
auto synthesize_world(std::uint64_t seed, const BalanceConfig &config) -> GeneratedWorld;

auto has_required_materials(const WorldGrid &grid) noexcept -> bool;

// BFS from spawn through walkable cells plus stone and ores (minable with
// the right tools) to any diamond.
auto diamond_reachable(const WorldGrid &grid) -> bool;

// Installs a generated world into a fresh state: grid, caves, creatures,
// player at spawn, RNG streams derived from episode_seed.
auto make_world_state(const GeneratedWorld &world, std::uint64_t episode_seed, const BalanceConfig &config)
    -> WorldState;

}    // namespace craftbench
