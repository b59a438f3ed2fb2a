#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "craftbench/config.hpp"
#include "craftbench/rng.hpp"
#include "craftbench/types.hpp"

namespace craftbench {

enum class CreatureKind : std::uint8_t { cow, zombie, skeleton, arrow, plant };

auto creature_name(CreatureKind kind) noexcept -> std::string_view;

// Non-player entity. `timer` is the kind-specific clock: zombie attack
// cooldown, skeleton reload, plant growth. `facing` is the arrow's flight
// direction and the skeleton's aim.
struct Creature {
    CreatureKind kind = CreatureKind::cow;
    Pos pos;
    int health = 0;
    int timer = 0;
    Direction facing = Direction::south;
    bool alive = true;

    auto operator==(const Creature &) const noexcept -> bool = default;
};

struct Player {
    Pos pos;
    Direction facing = Direction::south;
    std::array<int, kNumVitals> vitals{kMaxLevel, kMaxLevel, kMaxLevel, kMaxLevel};
    std::array<int, kNumItems> inventory{};
    bool sleeping = false;
    // Ticks accumulated toward the next change of each level.
    int hunger_clock = 0;
    int thirst_clock = 0;
    int fatigue_clock = 0;
    int rest_clock = 0;
    int degen_clock = 0;
    int regen_clock = 0;

    auto vital(Vital v) const noexcept -> int { return vitals[static_cast<std::size_t>(v)]; }
    auto vital(Vital v) noexcept -> int & { return vitals[static_cast<std::size_t>(v)]; }
    auto health() const noexcept -> int { return vital(Vital::health); }
    auto count(Item item) const noexcept -> int { return inventory[static_cast<std::size_t>(item)]; }
    auto count(Item item) noexcept -> int & { return inventory[static_cast<std::size_t>(item)]; }
    auto facing_pos() const noexcept -> Pos { return pos + offset(facing); }

    auto operator==(const Player &) const noexcept -> bool = default;
};

inline constexpr std::int16_t kEmptyCell = -1;
inline constexpr std::int16_t kPlayerCell = -2;

// The complete simulation state of one episode.
class WorldState {
public:
    WorldState();

    // Uniform world of `fill` with the player at `player_pos` and all RNG
    // streams derived from `seed`. Used for scripted micro-worlds.
    static auto uniform(Material fill, Pos player_pos, std::uint64_t seed = 0) -> WorldState;

    auto material(Pos p) const noexcept -> Material { return grid_[static_cast<std::size_t>(cell_index(p))]; }
    void set_material(Pos p, Material m) noexcept { grid_[static_cast<std::size_t>(cell_index(p))] = m; }
    auto grid() const noexcept -> const std::array<Material, kNumCells> & { return grid_; }
    auto grid() noexcept -> std::array<Material, kNumCells> & { return grid_; }

    auto is_cave(Pos p) const noexcept -> bool { return caves_[static_cast<std::size_t>(cell_index(p))] != 0; }
    void set_cave(Pos p, bool cave) noexcept { caves_[static_cast<std::size_t>(cell_index(p))] = cave ? 1 : 0; }

    // -1 empty, -2 player, otherwise index into creatures().
    auto occupant(Pos p) const noexcept -> std::int16_t { return occupancy_[static_cast<std::size_t>(cell_index(p))]; }
    auto is_free(Pos p) const noexcept -> bool { return occupant(p) == kEmptyCell; }
    auto creature_at(Pos p) noexcept -> Creature *;
    auto creature_at(Pos p) const noexcept -> const Creature *;

    auto creatures() const noexcept -> const std::vector<Creature> & { return creatures_; }
    auto creatures() noexcept -> std::vector<Creature> & { return creatures_; }
    auto count_alive(CreatureKind kind) const noexcept -> int;

    // Adds a creature if `p` is free; returns its index.
    auto add_creature(Creature c) -> std::optional<std::size_t>;
    void remove_creature(std::size_t index) noexcept;
    void move_creature(std::size_t index, Pos to) noexcept;
    // Drops dead creatures and rebuilds occupancy. Preserves relative order.
    void compact();

    auto player() const noexcept -> const Player & { return player_; }
    auto player() noexcept -> Player & { return player_; }
    void move_player(Pos to) noexcept;

    // Daylight clock in whole ticks, 0 <= day_tick < day_length.
    auto day_tick() const noexcept -> int { return day_tick_; }
    void set_day_tick(int t) noexcept { day_tick_ = t; }

    auto episode_seed() const noexcept -> std::uint64_t { return episode_seed_; }
    void seed_streams(std::uint64_t episode_seed) noexcept;

    Rng creature_rng;
    Rng spawn_rng;
    Rng view_rng;
    Rng interaction_rng;

    auto operator==(const WorldState &) const noexcept -> bool = default;

private:
    std::array<Material, kNumCells> grid_{};
    std::array<std::uint8_t, kNumCells> caves_{};
    std::array<std::int16_t, kNumCells> occupancy_{};
    std::vector<Creature> creatures_;
    Player player_;
    int day_tick_ = 0;
    std::uint64_t episode_seed_ = 0;
};

}    // namespace craftbench
