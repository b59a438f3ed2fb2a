#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace craftbench {

// Every tunable constant of world generation, simulation and rendering.
// Serialized as `key = number` lines; see BalanceConfig::to_text().
struct BalanceConfig {
    // World generation. Noise field thresholds partition the map into
    // grassland, lakes (with sand shores) and mountains (with caves,
    // tunnels, ores and lava). Densities are per-cell placement chances.
    int worldgen_max_attempts = 16;
    double spawn_clear_radius = 6.0;
    double mountain_clear_radius = 20.0;
    double water_threshold = 0.3;
    double sand_low = 0.25;
    double sand_high = 0.35;
    double mountain_threshold = 0.15;
    double cave_threshold = 0.15;
    double cave_min_mountain = 0.3;
    double tunnel_threshold = 0.4;
    double coal_noise_threshold = 0.0;
    double coal_density = 0.15;
    double iron_noise_threshold = 0.4;
    double iron_density = 0.25;
    double diamond_min_mountain = 0.18;
    double diamond_density = 0.006;
    double lava_min_mountain = 0.35;
    double lava_noise_threshold = 0.35;
    double tree_noise_threshold = 0.0;
    double tree_density = 0.15;
    double cow_density = 0.015;
    int cow_min_distance = 4;
    double zombie_density = 0.002;
    int zombie_min_distance = 14;
    double skeleton_density = 0.05;

    // Vitals. Periods are in ticks.
    int food_period = 60;
    int water_period = 45;
    int energy_period = 80;
    int sleep_energy_period = 10;
    int damage_period = 25;
    int regen_period = 30;

    // Combat.
    int zombie_damage = 2;
    int arrow_damage = 2;
    int damage_bare = 1;
    int damage_wood_sword = 2;
    int damage_stone_sword = 3;
    int damage_iron_sword = 5;
    int cow_health = 3;
    int zombie_health = 5;
    int skeleton_health = 3;

    // Recipes and interaction.
    int table_wood = 1;
    int furnace_stone = 1;
    int place_stone_cost = 1;
    int plant_sapling_cost = 1;
    int wood_pickaxe_wood = 1;
    int wood_sword_wood = 1;
    int stone_pickaxe_wood = 1;
    int stone_pickaxe_stone = 1;
    int stone_sword_wood = 1;
    int stone_sword_stone = 1;
    int iron_pickaxe_wood = 1;
    int iron_pickaxe_coal = 1;
    int iron_pickaxe_iron = 1;
    int iron_sword_wood = 1;
    int iron_sword_coal = 1;
    int iron_sword_iron = 1;
    int nearby_radius = 2;
    double sapling_probability = 0.1;
    int plant_ripen_ticks = 100;
    int plant_food = 6;
    // Chance per tick that a zombie next to a plant eats it.
    double plant_eaten_probability = 0.5;
    int cow_food = 6;
    int drink_amount = 1;

    // Day and night. Night is the last `night_length` ticks of each day.
    int day_length = 300;
    int night_length = 100;
    int night_zombie_multiplier = 3;

    // Creature behaviour.
    double cow_move_probability = 0.5;
    int zombie_aggro_radius = 8;
    double zombie_chase_probability = 0.8;
    double zombie_move_probability = 0.5;
    int zombie_cooldown = 5;
    int skeleton_reload = 4;
    int skeleton_shoot_range = 4;
    double skeleton_shoot_probability = 0.5;
    int skeleton_keep_distance = 2;
    double skeleton_retreat_probability = 0.4;
    int skeleton_approach_radius = 6;
    double skeleton_approach_probability = 0.3;
    double skeleton_move_probability = 0.2;

    // Population balancing.
    int cow_target = 8;
    int zombie_target = 3;
    int skeleton_target = 4;
    double spawn_probability = 0.1;
    double despawn_probability = 0.02;
    int spawn_min_distance = 10;
    int despawn_min_distance = 12;
    int spawn_attempts = 8;

    // Observation rendering.
    int night_visibility_radius = 2;
    double night_darkening = 0.4;
    double night_speckle_probability = 0.05;

    int time_limit = 10000;

    auto operator==(const BalanceConfig &) const noexcept -> bool = default;

    // Throws CraftError(config_error) when a value is out of its domain.
    void validate() const;

    // Canonical serialization: every key with its value, in declaration order.
    auto to_text() const -> std::string;

    // FNV-1a 64 of to_text(); identifies the config in episode records.
    auto hash() const -> std::uint64_t;

    // Parses `key = number` lines on top of the defaults. `#` starts a
    // comment. Unknown keys and malformed numbers are errors.
    static auto from_text(std::string_view text) -> BalanceConfig;
    static auto load(const std::filesystem::path &path) -> BalanceConfig;
    void save(const std::filesystem::path &path) const;
};

using ConfigMember = std::variant<int BalanceConfig::*, double BalanceConfig::*>;

enum class ConfigDomain { positive, probability, real };

struct ConfigField {
    std::string_view key;
    ConfigMember member;
    ConfigDomain domain;
};

auto config_fields() -> std::span<const ConfigField>;

}    // namespace craftbench
