#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace craftbench {

// The flat categorical action space. Indices are part of the external
// contract (episode records, bindings) and must never be reordered.
enum class Action : std::uint8_t {
    noop = 0,
    move_left = 1,
    move_right = 2,
    move_up = 3,
    move_down = 4,
    do_interact = 5,
    sleep = 6,
    place_stone = 7,
    place_table = 8,
    place_furnace = 9,
    place_plant = 10,
    make_wood_pickaxe = 11,
    make_stone_pickaxe = 12,
    make_iron_pickaxe = 13,
    make_wood_sword = 14,
    make_stone_sword = 15,
    make_iron_sword = 16,
};
inline constexpr int kNumActions = 17;

auto action_name(Action a) noexcept -> std::string_view;

// Parses either a decimal index or an action name ("do", "move_left", ...).
auto parse_action(std::string_view text) -> std::optional<Action>;

// Throws CraftError(invalid_action_index) for indices outside 0..16.
auto action_from_index(int index) -> Action;

// The 22 achievements, alphabetical. Order is the canonical column order of
// stats files and score tables.
enum class Achievement : std::uint8_t {
    collect_coal,
    collect_diamond,
    collect_drink,
    collect_iron,
    collect_sapling,
    collect_stone,
    collect_wood,
    defeat_skeleton,
    defeat_zombie,
    eat_cow,
    eat_plant,
    make_iron_pickaxe,
    make_iron_sword,
    make_stone_pickaxe,
    make_stone_sword,
    make_wood_pickaxe,
    make_wood_sword,
    place_furnace,
    place_plant,
    place_stone,
    place_table,
    wake_up,
};
inline constexpr int kNumAchievements = 22;

auto achievement_name(Achievement a) noexcept -> std::string_view;

// "Collect Coal" style label used in tables and charts.
auto achievement_title(Achievement a) -> std::string;

auto parse_achievement(std::string_view name) -> std::optional<Achievement>;

inline constexpr auto all_achievements() noexcept -> std::array<Achievement, kNumAchievements> {
    std::array<Achievement, kNumAchievements> out{};
    for (int i = 0; i < kNumAchievements; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<Achievement>(i);
    }
    return out;
}

// Per-episode unlock counts.
class AchievementSet {
public:
    auto count(Achievement a) const noexcept -> int { return counts_[static_cast<std::size_t>(a)]; }
    auto unlocked(Achievement a) const noexcept -> bool { return count(a) > 0; }

    // Returns true when this is the first unlock in the episode.
    auto record(Achievement a) noexcept -> bool { return counts_[static_cast<std::size_t>(a)]++ == 0; }

    auto distinct_unlocked() const noexcept -> int {
        int n = 0;
        for (int c : counts_) {
            n += c > 0 ? 1 : 0;
        }
        return n;
    }

    void clear() noexcept { counts_.fill(0); }

    auto counts() const noexcept -> const std::array<int, kNumAchievements> & { return counts_; }

    auto operator==(const AchievementSet &) const noexcept -> bool = default;

private:
    std::array<int, kNumAchievements> counts_{};
};

}    // namespace craftbench
