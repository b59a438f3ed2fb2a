#include <array>
#include <charconv>
#include <string>

#include "craftbench/actions.hpp"
#include "craftbench/error.hpp"
#include "craftbench/types.hpp"

namespace craftbench {

namespace {

constexpr std::array<std::string_view, kNumMaterials> kMaterialNames = {
    "water", "sand", "grass", "tree", "path", "stone", "coal", "iron", "diamond", "lava", "table", "furnace", "plant",
};

constexpr std::array<std::string_view, kNumItems> kItemNames = {
    "sapling",      "wood",          "stone",      "coal",        "iron",        "diamond",
    "wood_pickaxe", "stone_pickaxe", "iron_pickaxe", "wood_sword", "stone_sword", "iron_sword",
};

constexpr std::array<std::string_view, kNumVitals> kVitalNames = {"health", "food", "drink", "energy"};

constexpr std::array<std::string_view, kNumActions> kActionNames = {
    "noop",          "move_left",         "move_right",         "move_up",           "move_down",
    "do",            "sleep",             "place_stone",        "place_table",       "place_furnace",
    "place_plant",   "make_wood_pickaxe", "make_stone_pickaxe", "make_iron_pickaxe", "make_wood_sword",
    "make_stone_sword", "make_iron_sword",
};

constexpr std::array<std::string_view, kNumAchievements> kAchievementNames = {
    "collect_coal",       "collect_diamond",  "collect_drink",     "collect_iron",      "collect_sapling",
    "collect_stone",      "collect_wood",     "defeat_skeleton",   "defeat_zombie",     "eat_cow",
    "eat_plant",          "make_iron_pickaxe", "make_iron_sword",  "make_stone_pickaxe", "make_stone_sword",
    "make_wood_pickaxe",  "make_wood_sword",  "place_furnace",     "place_plant",       "place_stone",
    "place_table",        "wake_up",
};

}    // namespace

auto material_name(Material m) noexcept -> std::string_view {
    return kMaterialNames[static_cast<std::size_t>(m)];
}

auto item_name(Item item) noexcept -> std::string_view {
    return kItemNames[static_cast<std::size_t>(item)];
}

auto vital_name(Vital v) noexcept -> std::string_view {
    return kVitalNames[static_cast<std::size_t>(v)];
}

auto action_name(Action a) noexcept -> std::string_view {
    return kActionNames[static_cast<std::size_t>(a)];
}

auto action_from_index(int index) -> Action {
    if (index < 0 || index >= kNumActions) {
        throw CraftError(ErrorCode::invalid_action_index, "action index out of range: " + std::to_string(index));
    }
    return static_cast<Action>(index);
}

auto parse_action(std::string_view text) -> std::optional<Action> {
    int index = -1;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), index);
    if (ec == std::errc{} && ptr == text.data() + text.size()) {
        if (index >= 0 && index < kNumActions) {
            return static_cast<Action>(index);
        }
        return std::nullopt;
    }
    for (int i = 0; i < kNumActions; ++i) {
        if (kActionNames[static_cast<std::size_t>(i)] == text) {
            return static_cast<Action>(i);
        }
    }
    return std::nullopt;
}

auto achievement_name(Achievement a) noexcept -> std::string_view {
    return kAchievementNames[static_cast<std::size_t>(a)];
}

auto achievement_title(Achievement a) -> std::string {
    std::string out(achievement_name(a));
    bool upper = true;
    for (auto &c : out) {
        if (c == '_') {
            c = ' ';
            upper = true;
        } else if (upper) {
            c = static_cast<char>(c - 'a' + 'A');
            upper = false;
        }
    }
    return out;
}

auto parse_achievement(std::string_view name) -> std::optional<Achievement> {
    for (int i = 0; i < kNumAchievements; ++i) {
        if (kAchievementNames[static_cast<std::size_t>(i)] == name) {
            return static_cast<Achievement>(i);
        }
    }
    return std::nullopt;
}

auto error_code_name(ErrorCode code) noexcept -> const char * {
    switch (code) {
        case ErrorCode::ok:
            return "ok";
        case ErrorCode::invalid_action_index:
            return "InvalidActionIndex";
        case ErrorCode::stepped_after_done:
            return "SteppedAfterDone";
        case ErrorCode::retry_exhausted:
            return "RetryExhausted";
        case ErrorCode::io_failure:
            return "IoFailure";
        case ErrorCode::config_error:
            return "ConfigError";
        case ErrorCode::invalid_record:
            return "InvalidRecord";
        case ErrorCode::empty_log:
            return "EmptyLog";
        case ErrorCode::rate_out_of_range:
            return "RateOutOfRange";
        case ErrorCode::empty_input:
            return "EmptyInput";
        case ErrorCode::not_reset:
            return "NotReset";
        case ErrorCode::invalid_argument:
            return "InvalidArgument";
        case ErrorCode::invariant_violation:
            return "InvariantViolation";
    }
    return "unknown";
}

}    // namespace craftbench
