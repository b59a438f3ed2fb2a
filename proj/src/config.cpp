#include "craftbench/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "craftbench/error.hpp"

namespace craftbench {

namespace {

const std::array kFields = std::to_array<ConfigField>({
    {"worldgen_max_attempts", &BalanceConfig::worldgen_max_attempts, ConfigDomain::positive},
    {"spawn_clear_radius", &BalanceConfig::spawn_clear_radius, ConfigDomain::real},
    {"mountain_clear_radius", &BalanceConfig::mountain_clear_radius, ConfigDomain::real},
    {"water_threshold", &BalanceConfig::water_threshold, ConfigDomain::real},
    {"sand_low", &BalanceConfig::sand_low, ConfigDomain::real},
    {"sand_high", &BalanceConfig::sand_high, ConfigDomain::real},
    {"mountain_threshold", &BalanceConfig::mountain_threshold, ConfigDomain::real},
    {"cave_threshold", &BalanceConfig::cave_threshold, ConfigDomain::real},
    {"cave_min_mountain", &BalanceConfig::cave_min_mountain, ConfigDomain::real},
    {"tunnel_threshold", &BalanceConfig::tunnel_threshold, ConfigDomain::real},
    {"coal_noise_threshold", &BalanceConfig::coal_noise_threshold, ConfigDomain::real},
    {"coal_density", &BalanceConfig::coal_density, ConfigDomain::probability},
    {"iron_noise_threshold", &BalanceConfig::iron_noise_threshold, ConfigDomain::real},
    {"iron_density", &BalanceConfig::iron_density, ConfigDomain::probability},
    {"diamond_min_mountain", &BalanceConfig::diamond_min_mountain, ConfigDomain::real},
    {"diamond_density", &BalanceConfig::diamond_density, ConfigDomain::probability},
    {"lava_min_mountain", &BalanceConfig::lava_min_mountain, ConfigDomain::real},
    {"lava_noise_threshold", &BalanceConfig::lava_noise_threshold, ConfigDomain::real},
    {"tree_noise_threshold", &BalanceConfig::tree_noise_threshold, ConfigDomain::real},
    {"tree_density", &BalanceConfig::tree_density, ConfigDomain::probability},
    {"cow_density", &BalanceConfig::cow_density, ConfigDomain::probability},
    {"cow_min_distance", &BalanceConfig::cow_min_distance, ConfigDomain::positive},
    {"zombie_density", &BalanceConfig::zombie_density, ConfigDomain::probability},
    {"zombie_min_distance", &BalanceConfig::zombie_min_distance, ConfigDomain::positive},
    {"skeleton_density", &BalanceConfig::skeleton_density, ConfigDomain::probability},
    {"food_period", &BalanceConfig::food_period, ConfigDomain::positive},
    {"water_period", &BalanceConfig::water_period, ConfigDomain::positive},
    {"energy_period", &BalanceConfig::energy_period, ConfigDomain::positive},
    {"sleep_energy_period", &BalanceConfig::sleep_energy_period, ConfigDomain::positive},
    {"damage_period", &BalanceConfig::damage_period, ConfigDomain::positive},
    {"regen_period", &BalanceConfig::regen_period, ConfigDomain::positive},
    {"zombie_damage", &BalanceConfig::zombie_damage, ConfigDomain::positive},
    {"arrow_damage", &BalanceConfig::arrow_damage, ConfigDomain::positive},
    {"damage_bare", &BalanceConfig::damage_bare, ConfigDomain::positive},
    {"damage_wood_sword", &BalanceConfig::damage_wood_sword, ConfigDomain::positive},
    {"damage_stone_sword", &BalanceConfig::damage_stone_sword, ConfigDomain::positive},
    {"damage_iron_sword", &BalanceConfig::damage_iron_sword, ConfigDomain::positive},
    {"cow_health", &BalanceConfig::cow_health, ConfigDomain::positive},
    {"zombie_health", &BalanceConfig::zombie_health, ConfigDomain::positive},
    {"skeleton_health", &BalanceConfig::skeleton_health, ConfigDomain::positive},
    {"table_wood", &BalanceConfig::table_wood, ConfigDomain::positive},
    {"furnace_stone", &BalanceConfig::furnace_stone, ConfigDomain::positive},
    {"place_stone_cost", &BalanceConfig::place_stone_cost, ConfigDomain::positive},
    {"plant_sapling_cost", &BalanceConfig::plant_sapling_cost, ConfigDomain::positive},
    {"wood_pickaxe_wood", &BalanceConfig::wood_pickaxe_wood, ConfigDomain::positive},
    {"wood_sword_wood", &BalanceConfig::wood_sword_wood, ConfigDomain::positive},
    {"stone_pickaxe_wood", &BalanceConfig::stone_pickaxe_wood, ConfigDomain::positive},
    {"stone_pickaxe_stone", &BalanceConfig::stone_pickaxe_stone, ConfigDomain::positive},
    {"stone_sword_wood", &BalanceConfig::stone_sword_wood, ConfigDomain::positive},
    {"stone_sword_stone", &BalanceConfig::stone_sword_stone, ConfigDomain::positive},
    {"iron_pickaxe_wood", &BalanceConfig::iron_pickaxe_wood, ConfigDomain::positive},
    {"iron_pickaxe_coal", &BalanceConfig::iron_pickaxe_coal, ConfigDomain::positive},
    {"iron_pickaxe_iron", &BalanceConfig::iron_pickaxe_iron, ConfigDomain::positive},
    {"iron_sword_wood", &BalanceConfig::iron_sword_wood, ConfigDomain::positive},
    {"iron_sword_coal", &BalanceConfig::iron_sword_coal, ConfigDomain::positive},
    {"iron_sword_iron", &BalanceConfig::iron_sword_iron, ConfigDomain::positive},
    {"nearby_radius", &BalanceConfig::nearby_radius, ConfigDomain::positive},
    {"sapling_probability", &BalanceConfig::sapling_probability, ConfigDomain::probability},
    {"plant_ripen_ticks", &BalanceConfig::plant_ripen_ticks, ConfigDomain::positive},
    {"plant_food", &BalanceConfig::plant_food, ConfigDomain::positive},
    {"plant_eaten_probability", &BalanceConfig::plant_eaten_probability, ConfigDomain::probability},
    {"cow_food", &BalanceConfig::cow_food, ConfigDomain::positive},
    {"drink_amount", &BalanceConfig::drink_amount, ConfigDomain::positive},
    {"day_length", &BalanceConfig::day_length, ConfigDomain::positive},
    {"night_length", &BalanceConfig::night_length, ConfigDomain::positive},
    {"night_zombie_multiplier", &BalanceConfig::night_zombie_multiplier, ConfigDomain::positive},
    {"cow_move_probability", &BalanceConfig::cow_move_probability, ConfigDomain::probability},
    {"zombie_aggro_radius", &BalanceConfig::zombie_aggro_radius, ConfigDomain::positive},
    {"zombie_chase_probability", &BalanceConfig::zombie_chase_probability, ConfigDomain::probability},
    {"zombie_move_probability", &BalanceConfig::zombie_move_probability, ConfigDomain::probability},
    {"zombie_cooldown", &BalanceConfig::zombie_cooldown, ConfigDomain::positive},
    {"skeleton_reload", &BalanceConfig::skeleton_reload, ConfigDomain::positive},
    {"skeleton_shoot_range", &BalanceConfig::skeleton_shoot_range, ConfigDomain::positive},
    {"skeleton_shoot_probability", &BalanceConfig::skeleton_shoot_probability, ConfigDomain::probability},
    {"skeleton_keep_distance", &BalanceConfig::skeleton_keep_distance, ConfigDomain::positive},
    {"skeleton_retreat_probability", &BalanceConfig::skeleton_retreat_probability, ConfigDomain::probability},
    {"skeleton_approach_radius", &BalanceConfig::skeleton_approach_radius, ConfigDomain::positive},
    {"skeleton_approach_probability", &BalanceConfig::skeleton_approach_probability, ConfigDomain::probability},
    {"skeleton_move_probability", &BalanceConfig::skeleton_move_probability, ConfigDomain::probability},
    {"cow_target", &BalanceConfig::cow_target, ConfigDomain::positive},
    {"zombie_target", &BalanceConfig::zombie_target, ConfigDomain::positive},
    {"skeleton_target", &BalanceConfig::skeleton_target, ConfigDomain::positive},
    {"spawn_probability", &BalanceConfig::spawn_probability, ConfigDomain::probability},
    {"despawn_probability", &BalanceConfig::despawn_probability, ConfigDomain::probability},
    {"spawn_min_distance", &BalanceConfig::spawn_min_distance, ConfigDomain::positive},
    {"despawn_min_distance", &BalanceConfig::despawn_min_distance, ConfigDomain::positive},
    {"spawn_attempts", &BalanceConfig::spawn_attempts, ConfigDomain::positive},
    {"night_visibility_radius", &BalanceConfig::night_visibility_radius, ConfigDomain::positive},
    {"night_darkening", &BalanceConfig::night_darkening, ConfigDomain::probability},
    {"night_speckle_probability", &BalanceConfig::night_speckle_probability, ConfigDomain::probability},
    {"time_limit", &BalanceConfig::time_limit, ConfigDomain::positive},
});

auto trim(std::string_view s) -> std::string_view {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

auto find_field(std::string_view key) -> const ConfigField * {
    for (const auto &f : kFields) {
        if (f.key == key) {
            return &f;
        }
    }
    return nullptr;
}

auto format_double(double v) -> std::string {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    std::string out(buf.data(), end);
    // Keep doubles visibly distinct from ints in the file.
    if (out.find_first_of(".eE") == std::string::npos && out.find("inf") == std::string::npos &&
        out.find("nan") == std::string::npos) {
        out += ".0";
    }
    return out;
}

}    // namespace

auto config_fields() -> std::span<const ConfigField> {
    return kFields;
}

void BalanceConfig::validate() const {
    for (const auto &f : kFields) {
        const bool ok = std::visit(
            [&](auto member) -> bool {
                const double v = static_cast<double>(this->*member);
                switch (f.domain) {
                    case ConfigDomain::positive:
                        return v > 0;
                    case ConfigDomain::probability:
                        return v >= 0.0 && v <= 1.0;
                    case ConfigDomain::real:
                        return std::isfinite(v);
                }
                return false;
            },
            f.member);
        if (!ok) {
            throw CraftError(ErrorCode::config_error, "config value out of range: " + std::string(f.key));
        }
    }
    if (night_length >= day_length) {
        throw CraftError(ErrorCode::config_error, "night_length must be shorter than day_length");
    }
    if (sand_low > sand_high) {
        throw CraftError(ErrorCode::config_error, "sand_low must not exceed sand_high");
    }
}

auto BalanceConfig::to_text() const -> std::string {
    std::string out;
    out.reserve(4096);
    for (const auto &f : kFields) {
        out += f.key;
        out += " = ";
        std::visit(
            [&](auto member) {
                using T = std::remove_cvref_t<decltype(this->*member)>;
                if constexpr (std::is_same_v<T, int>) {
                    out += std::to_string(this->*member);
                } else {
                    out += format_double(this->*member);
                }
            },
            f.member);
        out += '\n';
    }
    return out;
}

auto BalanceConfig::hash() const -> std::uint64_t {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_text()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

auto BalanceConfig::from_text(std::string_view text) -> BalanceConfig {
    BalanceConfig cfg;
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash_pos = line.find('#'); hash_pos != std::string_view::npos) {
            line = line.substr(0, hash_pos);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw CraftError(ErrorCode::config_error, "line " + std::to_string(line_no) + ": expected key = value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        const auto *field = find_field(key);
        if (field == nullptr) {
            throw CraftError(ErrorCode::config_error, "line " + std::to_string(line_no) + ": unknown key '" +
                                                          std::string(key) + "'");
        }
        std::visit(
            [&](auto member) {
                using T = std::remove_cvref_t<decltype(cfg.*member)>;
                T parsed{};
                const auto *first = value.data();
                const auto *last = value.data() + value.size();
                auto [ptr, ec] = std::from_chars(first, last, parsed);
                if (ec != std::errc{} || ptr != last) {
                    throw CraftError(ErrorCode::config_error, "line " + std::to_string(line_no) +
                                                                  ": bad number for '" + std::string(key) + "'");
                }
                cfg.*member = parsed;
            },
            field->member);
    }
    cfg.validate();
    return cfg;
}

auto BalanceConfig::load(const std::filesystem::path &path) -> BalanceConfig {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CraftError(ErrorCode::io_failure, "cannot open config " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str());
}

void BalanceConfig::save(const std::filesystem::path &path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw CraftError(ErrorCode::io_failure, "cannot write config " + path.string());
    }
    out << "# craftbench balance table\n" << to_text();
    if (!out) {
        throw CraftError(ErrorCode::io_failure, "write failed: " + path.string());
    }
}

}    // namespace craftbench
