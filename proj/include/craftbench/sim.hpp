#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "craftbench/actions.hpp"
#include "craftbench/config.hpp"
#include "craftbench/world.hpp"

namespace craftbench {

// Semantic events emitted by the simulation. Each maps to at most one
// achievement; see achievement_for().
enum class EventKind : std::uint8_t { collected, drank, defeated, ate, placed, made, woke_up, damaged, died };

// What an event refers to. Items reuse their inventory names; creatures and
// placed materials have their own tags.
enum class Subject : std::uint8_t {
    none,
    sapling,
    wood,
    stone,
    coal,
    iron,
    diamond,
    table,
    furnace,
    plant,
    cow,
    zombie,
    skeleton,
    arrow,
    lava,
    wood_pickaxe,
    stone_pickaxe,
    iron_pickaxe,
    wood_sword,
    stone_sword,
    iron_sword,
    starvation,
};

struct Event {
    EventKind kind;
    Subject subject = Subject::none;

    auto operator==(const Event &) const noexcept -> bool = default;
};

using EventList = std::vector<Event>;

auto achievement_for(const Event &e) noexcept -> std::optional<Achievement>;

// Applies one player action. Unmet requirements leave the state untouched.
// While the player sleeps every action is treated as noop.
void apply_action(WorldState &state, Action action, const BalanceConfig &config, EventList &events);

// Food, water and energy decay; starvation damage; regeneration; sleep
// recovery. Returns the net health change of this call.
auto tick_vitals(WorldState &state, const BalanceConfig &config, EventList &events) -> int;

// Moves and updates every creature, arrow and plant in list order. Returns
// the total damage dealt to the player.
auto tick_entities(WorldState &state, const BalanceConfig &config, EventList &events) -> int;

// Spawns and despawns cows, zombies and skeletons toward their targets.
void balance_spawns(WorldState &state, const BalanceConfig &config);

// Advances the day clock by one tick and wakes a rested sleeper at daylight.
void advance_daylight(WorldState &state, const BalanceConfig &config, EventList &events);

auto is_night(const WorldState &state, const BalanceConfig &config) noexcept -> bool;

// Phase of the day in [0, 1).
auto daylight_phase(const WorldState &state, const BalanceConfig &config) noexcept -> double;

// 1 during the day, config.night_darkening at night.
auto light_level(const WorldState &state, const BalanceConfig &config) noexcept -> double;

auto zombie_target(const WorldState &state, const BalanceConfig &config) noexcept -> int;

// Table/furnace within config.nearby_radius (Chebyshev) of the player.
auto is_nearby(const WorldState &state, Material m, const BalanceConfig &config) noexcept -> bool;

// Attack damage from the best sword held.
auto player_damage(const Player &player, const BalanceConfig &config) noexcept -> int;

// Subtracts health (clamped at 0) and interrupts sleep.
void damage_player(WorldState &state, int amount, Subject cause, EventList &events) noexcept;

}    // namespace craftbench
