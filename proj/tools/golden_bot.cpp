// Planner with full state access that searches for an episode unlocking
// every achievement and writes its action trace as a replayable script.
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "craftbench/env.hpp"
#include "craftbench/error.hpp"
#include "craftbench/sim.hpp"

using namespace craftbench;

namespace {

auto move_action(Direction d) -> Action {
    switch (d) {
        case Direction::north:
            return Action::move_up;
        case Direction::south:
            return Action::move_down;
        case Direction::east:
            return Action::move_right;
        case Direction::west:
            return Action::move_left;
    }
    return Action::noop;
}

auto is_open(Material m) -> bool {
    return m == Material::grass || m == Material::sand || m == Material::path;
}

auto can_mine(const Player &p, Material m) -> bool {
    switch (m) {
        case Material::stone:
        case Material::coal:
            return p.count(Item::wood_pickaxe) > 0;
        case Material::iron:
            return p.count(Item::stone_pickaxe) > 0;
        case Material::diamond:
            return p.count(Item::iron_pickaxe) > 0;
        default:
            return false;
    }
}

// Goal test on (standing cell, faced cell).
using Target = std::function<bool(const WorldState &, Pos, Pos)>;

struct Route {
    bool arrived = false;
    Action first = Action::noop;
    int cost = 0;
};

// Dijkstra over (cell, facing). Moving onto open free cells costs 1,
// mining the faced cell and stepping in costs 2, turning toward a blocked
// cell costs 1. Never steps or turns toward lava.
auto plan(const WorldState &s, const Target &target, int max_cost = 400) -> std::optional<Route> {
    const auto &p = s.player();
    const auto key = [](Pos pos, Direction f) { return cell_index(pos) * 4 + static_cast<int>(f); };
    if (target(s, p.pos, p.facing_pos())) {
        return Route{true, Action::noop, 0};
    }
    std::vector<int> dist(kNumCells * 4, 1 << 30);
    std::vector<Action> first(kNumCells * 4, Action::noop);
    using Item_ = std::pair<int, int>;
    std::priority_queue<Item_, std::vector<Item_>, std::greater<>> queue;
    const int start = key(p.pos, p.facing);
    dist[static_cast<std::size_t>(start)] = 0;
    queue.push({0, start});
    while (!queue.empty()) {
        const auto [d, k] = queue.top();
        queue.pop();
        if (d != dist[static_cast<std::size_t>(k)] || d > max_cost) {
            continue;
        }
        const Pos pos{(k / 4) % kWorldSize, (k / 4) / kWorldSize};
        const auto facing = static_cast<Direction>(k % 4);
        if (k != start && target(s, pos, pos + offset(facing))) {
            return Route{false, first[static_cast<std::size_t>(k)], d};
        }
        for (auto dir : kDirections) {
            const Pos n = pos + offset(dir);
            if (!in_bounds(n) || s.material(n) == Material::lava) {
                continue;
            }
            const Material m = s.material(n);
            const bool free = s.is_free(n) || n == p.pos;
            int next = -1;
            int cost = 1;
            Action act = move_action(dir);
            if (in_interior(n) && free && is_walkable(m)) {
                next = key(n, dir);
            } else if (dir == facing && in_interior(n) && free && can_mine(p, m)) {
                next = key(n, dir);
                cost = 2;
                act = Action::do_interact;
            } else if (dir != facing) {
                next = key(pos, dir);
            }
            if (next < 0) {
                continue;
            }
            const int nd = d + cost;
            if (nd < dist[static_cast<std::size_t>(next)]) {
                dist[static_cast<std::size_t>(next)] = nd;
                first[static_cast<std::size_t>(next)] = k == start ? act : first[static_cast<std::size_t>(k)];
                queue.push({nd, next});
            }
        }
    }
    return std::nullopt;
}

auto faced_material(Material m) -> Target {
    return [m](const WorldState &s, Pos, Pos q) { return in_bounds(q) && s.is_free(q) && s.material(q) == m; };
}

auto faced_creature(CreatureKind kind) -> Target {
    return [kind](const WorldState &s, Pos, Pos q) {
        const auto *c = in_bounds(q) ? s.creature_at(q) : nullptr;
        return c != nullptr && c->kind == kind;
    };
}

class Bot {
public:
    explicit Bot(const BalanceConfig &cfg) : cfg_(cfg) {}

    // Next action, or nothing once every achievement is unlocked.
    auto next(const Env &env) -> std::optional<Action> {
        const auto &s = env.state();
        const auto &p = s.player();
        const auto &ach = env.achievements();
        if (ach.distinct_unlocked() == kNumAchievements) {
            return std::nullopt;
        }
        if (p.sleeping) {
            return Action::noop;
        }
        if (const auto a = fight_adjacent(s)) {
            return a;
        }
        if (sheltering_) {
            if (const auto a = shelter(s)) {
                return a;
            }
            sheltering_ = false;
        }
        return choose(env).value_or(Action::noop);
    }

private:
    using Task = std::function<std::optional<Action>()>;

    auto go(const WorldState &s, const Target &target, Action then, int max_cost = 400) -> std::optional<Action> {
        const auto r = plan(s, target, max_cost);
        if (!r) {
            return std::nullopt;
        }
        return r->arrived ? then : r->first;
    }

    auto fight_adjacent(const WorldState &s) -> std::optional<Action> {
        const auto &p = s.player();
        for (auto d : kDirections) {
            const Pos q = p.pos + offset(d);
            const auto *c = in_bounds(q) ? s.creature_at(q) : nullptr;
            if (c != nullptr && (c->kind == CreatureKind::zombie || c->kind == CreatureKind::skeleton)) {
                return p.facing == d ? Action::do_interact : move_action(d);
            }
        }
        return std::nullopt;
    }

    auto near_table_target(bool furnace) const -> Target {
        return [this, furnace](const WorldState &s, Pos pos, Pos) {
            return near(s, pos, Material::table) && (!furnace || near(s, pos, Material::furnace));
        };
    }

    auto near(const WorldState &s, Pos pos, Material m) const -> bool {
        const int r = cfg_.nearby_radius;
        for (int y = pos.y - r; y <= pos.y + r; ++y) {
            for (int x = pos.x - r; x <= pos.x + r; ++x) {
                if (in_bounds({x, y}) && s.material({x, y}) == m) {
                    return true;
                }
            }
        }
        return false;
    }

    // Crafts `make` next to a table (and furnace), walking to an existing
    // one when close, otherwise placing new ones.
    auto craft(const WorldState &s, Action make, bool furnace) -> std::optional<Action> {
        const auto &p = s.player();
        const bool has_table = is_nearby(s, Material::table, cfg_);
        const bool has_furnace = is_nearby(s, Material::furnace, cfg_);
        if (has_table && (!furnace || has_furnace)) {
            return make;
        }
        if (const auto r = plan(s, near_table_target(furnace), 20)) {
            return r->arrived ? make : r->first;
        }
        auto flat = [](const WorldState &w, Pos, Pos q) { return in_interior(q) && w.is_free(q) && is_open(w.material(q)); };
        if (!has_table) {
            if (p.count(Item::wood) < cfg_.table_wood + 1) {
                return std::nullopt;
            }
            return go(s, flat, Action::place_table);
        }
        if (p.count(Item::stone) < cfg_.furnace_stone) {
            return std::nullopt;
        }
        return go(s, [&](const WorldState &w, Pos pos, Pos q) { return flat(w, pos, q) && near(w, pos, Material::table); },
                  Action::place_furnace);
    }

    auto wood_needed(const Player &p) const -> int {
        int n = 2 * cfg_.table_wood;
        n += p.count(Item::wood_pickaxe) > 0 ? 0 : cfg_.wood_pickaxe_wood;
        n += p.count(Item::wood_sword) > 0 ? 0 : cfg_.wood_sword_wood;
        n += p.count(Item::stone_pickaxe) > 0 ? 0 : cfg_.stone_pickaxe_wood;
        n += p.count(Item::stone_sword) > 0 ? 0 : cfg_.stone_sword_wood;
        n += p.count(Item::iron_pickaxe) > 0 ? 0 : cfg_.iron_pickaxe_wood;
        n += p.count(Item::iron_sword) > 0 ? 0 : cfg_.iron_sword_wood;
        return n;
    }

    auto stone_needed(const Player &p, const AchievementSet &ach) const -> int {
        int n = 8;
        n += ach.unlocked(Achievement::place_stone) ? 0 : cfg_.place_stone_cost;
        n += ach.unlocked(Achievement::place_furnace) ? 0 : cfg_.furnace_stone;
        n += p.count(Item::stone_pickaxe) > 0 ? 0 : cfg_.stone_pickaxe_stone;
        n += p.count(Item::stone_sword) > 0 ? 0 : cfg_.stone_sword_stone;
        return n;
    }

    // Tasks in priority order; the first one that yields an action wins.
    auto choose(const Env &env) -> std::optional<Action> {
        const auto &s = env.state();
        const auto &p = s.player();
        const auto &ach = env.achievements();
        const bool night = is_night(s, cfg_);
        std::vector<Task> out;

        auto drink = [&] { return go(s, faced_material(Material::water), Action::do_interact); };
        auto ripe_plant = [&](const WorldState &w, Pos, Pos q) {
            const auto *c = in_bounds(q) ? w.creature_at(q) : nullptr;
            return c != nullptr && c->kind == CreatureKind::plant && c->timer >= cfg_.plant_ripen_ticks;
        };
        auto eat = [&]() -> std::optional<Action> {
            if (auto a = go(s, ripe_plant, Action::do_interact, 60)) {
                return a;
            }
            return go(s, faced_creature(CreatureKind::cow), Action::do_interact);
        };

        if (p.vital(Vital::water) <= 4) {
            out.push_back(drink);
        }
        if (p.vital(Vital::food) <= 4) {
            out.push_back(eat);
        }
        // Skeletons shoot along rows and columns; fight close ones, rest
        // away from them when hurt.
        if (p.health() <= 4) {
            out.push_back([&]() -> std::optional<Action> {
                const auto r = plan(s, [this](const WorldState &w, Pos pos, Pos) { return !skeleton_within(w, pos, 7); });
                if (!r) {
                    return std::nullopt;
                }
                return r->arrived ? Action::noop : r->first;
            });
        } else if (skeleton_within(s, p.pos, 4)) {
            out.push_back([&] { return go(s, faced_creature(CreatureKind::skeleton), Action::do_interact, 12); });
        }
        if (p.vital(Vital::energy) <= 2 || (night && p.vital(Vital::energy) <= 5)) {
            out.push_back([&]() -> std::optional<Action> {
                sheltering_ = true;
                anchor_.reset();
                return shelter(s);
            });
        }
        if (p.count(Item::wood) < wood_needed(p) && p.count(Item::wood) < 9) {
            out.push_back([&] { return go(s, faced_material(Material::tree), Action::do_interact); });
        }
        const bool plant_alive = s.count_alive(CreatureKind::plant) > 0;
        if (!ach.unlocked(Achievement::eat_plant) && !plant_alive) {
            if (p.count(Item::sapling) == 0) {
                out.push_back([&] { return go(s, faced_material(Material::grass), Action::do_interact); });
            } else {
                out.push_back([&] { return go(s, faced_material(Material::grass), Action::place_plant); });
            }
        }
        if (!ach.unlocked(Achievement::collect_sapling)) {
            out.push_back([&] { return go(s, faced_material(Material::grass), Action::do_interact); });
        }
        if (!ach.unlocked(Achievement::collect_drink)) {
            out.push_back(drink);
        }
        if (p.count(Item::wood_pickaxe) == 0) {
            out.push_back([&] { return craft(s, Action::make_wood_pickaxe, false); });
        }
        if (p.count(Item::wood_sword) == 0) {
            out.push_back([&] { return craft(s, Action::make_wood_sword, false); });
        }
        if (!ach.unlocked(Achievement::wake_up) && !night && p.vital(Vital::energy) < kMaxLevel && !zombie_within(s, 8)) {
            out.push_back([] { return std::optional<Action>(Action::sleep); });
        }
        if (!ach.unlocked(Achievement::eat_cow)) {
            out.push_back([&] { return go(s, faced_creature(CreatureKind::cow), Action::do_interact, 30); });
        }
        if (p.count(Item::wood_pickaxe) > 0 && p.count(Item::stone) < stone_needed(p, ach)) {
            out.push_back([&] { return go(s, faced_material(Material::stone), Action::do_interact); });
        }
        if (!ach.unlocked(Achievement::place_stone) && p.count(Item::stone) > 0) {
            out.push_back([&] {
                return go(
                    s, [](const WorldState &w, Pos, Pos q) { return in_interior(q) && w.is_free(q) && is_open(w.material(q)); },
                    Action::place_stone);
            });
        }
        if (p.count(Item::stone_pickaxe) == 0) {
            out.push_back([&] { return craft(s, Action::make_stone_pickaxe, false); });
        }
        if (p.count(Item::stone_sword) == 0) {
            out.push_back([&] { return craft(s, Action::make_stone_sword, false); });
        }
        const int coal_needed = (p.count(Item::iron_pickaxe) > 0 ? 0 : cfg_.iron_pickaxe_coal) +
                                (p.count(Item::iron_sword) > 0 ? 0 : cfg_.iron_sword_coal);
        const int iron_needed = (p.count(Item::iron_pickaxe) > 0 ? 0 : cfg_.iron_pickaxe_iron) +
                                (p.count(Item::iron_sword) > 0 ? 0 : cfg_.iron_sword_iron);
        if (p.count(Item::wood_pickaxe) > 0 && (p.count(Item::coal) < coal_needed || !ach.unlocked(Achievement::collect_coal))) {
            out.push_back([&] { return go(s, faced_material(Material::coal), Action::do_interact); });
        }
        if (p.count(Item::stone_pickaxe) > 0 && p.count(Item::iron) < iron_needed) {
            out.push_back([&] { return go(s, faced_material(Material::iron), Action::do_interact); });
        }
        if (p.count(Item::iron_pickaxe) == 0) {
            out.push_back([&] { return craft(s, Action::make_iron_pickaxe, true); });
        }
        if (p.count(Item::iron_sword) == 0) {
            out.push_back([&] { return craft(s, Action::make_iron_sword, true); });
        }
        if (!ach.unlocked(Achievement::place_furnace) && p.count(Item::stone) >= cfg_.furnace_stone) {
            out.push_back([&] { return craft(s, Action::noop, true); });
        }
        if (!ach.unlocked(Achievement::collect_diamond)) {
            out.push_back([&] { return go(s, faced_material(Material::diamond), Action::do_interact); });
        }
        if (!ach.unlocked(Achievement::eat_plant)) {
            out.push_back([&] { return go(s, ripe_plant, Action::do_interact); });
        }
        if (!ach.unlocked(Achievement::defeat_zombie)) {
            out.push_back([&] { return go(s, faced_creature(CreatureKind::zombie), Action::do_interact); });
        }
        if (!ach.unlocked(Achievement::defeat_skeleton)) {
            out.push_back([&] { return go(s, faced_creature(CreatureKind::skeleton), Action::do_interact); });
        }
        if (!ach.unlocked(Achievement::eat_cow)) {
            out.push_back([&] { return go(s, faced_creature(CreatureKind::cow), Action::do_interact); });
        }
        if (!ach.unlocked(Achievement::wake_up) && p.vital(Vital::energy) < kMaxLevel) {
            out.push_back([&]() -> std::optional<Action> {
                sheltering_ = true;
                anchor_.reset();
                return shelter(s);
            });
        }
        // Idle near the plant while it ripens.
        if (!ach.unlocked(Achievement::eat_plant)) {
            out.push_back([&] {
                return go(
                    s,
                    [](const WorldState &w, Pos, Pos q) {
                        const auto *c = in_bounds(q) ? w.creature_at(q) : nullptr;
                        return c != nullptr && c->kind == CreatureKind::plant;
                    },
                    Action::noop);
            });
        }
        for (const auto &task : out) {
            if (const auto a = task()) {
                return a;
            }
        }
        return std::nullopt;
    }

    auto skeleton_within(const WorldState &s, Pos pos, int r) const -> bool {
        for (const auto &c : s.creatures()) {
            if (c.alive && (c.kind == CreatureKind::skeleton || c.kind == CreatureKind::arrow) && chebyshev(c.pos, pos) <= r) {
                return true;
            }
        }
        return false;
    }

    auto zombie_within(const WorldState &s, int r) const -> bool {
        for (const auto &c : s.creatures()) {
            if (c.alive && c.kind == CreatureKind::zombie && chebyshev(c.pos, s.player().pos) <= r) {
                return true;
            }
        }
        return false;
    }

    // Room cells of the 2x2 shelter anchored at its top-left corner.
    static auto room(Pos a) -> std::array<Pos, 4> {
        return {a, a + Pos{1, 0}, a + Pos{0, 1}, a + Pos{1, 1}};
    }

    static auto in_room(Pos a, Pos q) -> bool {
        return q.x >= a.x && q.x <= a.x + 1 && q.y >= a.y && q.y <= a.y + 1;
    }

    auto open_walls(const WorldState &s, Pos a) const -> int {
        int n = 0;
        for (const Pos r : room(a)) {
            for (auto d : kDirections) {
                const Pos q = r + offset(d);
                if (!in_room(a, q) && is_open(s.material(q))) {
                    ++n;
                }
            }
        }
        return n;
    }

    auto pick_anchor(const WorldState &s) const -> std::optional<Pos> {
        const auto &p = s.player();
        std::optional<Pos> best;
        int best_score = 1 << 30;
        for (int y = 2; y < kWorldSize - 3; ++y) {
            for (int x = 2; x < kWorldSize - 3; ++x) {
                const Pos a{x, y};
                bool ok = true;
                for (const Pos r : room(a)) {
                    ok = ok && is_open(s.material(r)) && (s.is_free(r) || r == p.pos);
                }
                if (!ok) {
                    continue;
                }
                const int walls = open_walls(s, a);
                if (walls > p.count(Item::stone)) {
                    continue;
                }
                const int score = manhattan(a, p.pos) + 4 * walls;
                if (score < best_score) {
                    best_score = score;
                    best = a;
                }
            }
        }
        return best;
    }

    // Walks into a 2x2 room, walls it in with stone and sleeps. Inside the
    // room every perimeter cell can be faced by stepping across the room.
    auto shelter(const WorldState &s) -> std::optional<Action> {
        const auto &p = s.player();
        if (!anchor_) {
            anchor_ = pick_anchor(s);
        }
        if (!anchor_) {
            // No stone for walls: sleep in the open.
            return p.vital(Vital::energy) < kMaxLevel ? std::optional<Action>(Action::sleep) : std::nullopt;
        }
        const Pos a = *anchor_;
        if (!in_room(a, p.pos)) {
            const auto r = plan(s, [a](const WorldState &, Pos pos, Pos) { return in_room(a, pos); });
            if (!r) {
                anchor_.reset();
                return std::nullopt;
            }
            return r->first;
        }
        const Pos ahead = p.facing_pos();
        if (!in_room(a, ahead) && is_open(s.material(ahead))) {
            if (const auto *c = s.creature_at(ahead); c != nullptr) {
                return Action::do_interact;
            }
            if (p.count(Item::stone) < cfg_.place_stone_cost) {
                anchor_.reset();
                return std::nullopt;
            }
            return Action::place_stone;
        }
        for (const Pos r : room(a)) {
            for (auto d : kDirections) {
                const Pos q = r + offset(d);
                if (in_room(a, q) || !is_open(s.material(q))) {
                    continue;
                }
                // Face q by stepping from the opposite room cell into r.
                const Pos from = r - offset(d);
                if (p.pos == from) {
                    return move_action(d);
                }
                const Pos step = from - p.pos;
                if (p.pos == r) {
                    return move_action(opposite(d));
                }
                return move_action(step.x != 0 ? (step.x > 0 ? Direction::east : Direction::west)
                                                : (step.y > 0 ? Direction::south : Direction::north));
            }
        }
        if (p.vital(Vital::energy) < kMaxLevel) {
            return Action::sleep;
        }
        return std::nullopt;
    }

    const BalanceConfig &cfg_;
    bool sheltering_ = false;
    std::optional<Pos> anchor_;
};

struct Attempt {
    std::vector<Action> actions;
    int unlocked = 0;
    std::string death;
};

auto attempt(std::uint64_t seed, const BalanceConfig &cfg, int max_steps) -> Attempt {
    Env env(cfg, EnvOptions{.render_observations = false, .semantic_info = false});
    env.reset(seed, 0);
    Bot bot(cfg);
    Attempt out;
    while (!env.done() && static_cast<int>(out.actions.size()) < max_steps) {
        const auto a = bot.next(env);
        if (!a) {
            break;
        }
        const auto &r = env.step(*a);
        out.actions.push_back(*a);
        for (const auto &e : r.info.events) {
            if (e.kind == EventKind::died) {
                out.death = " (killed by subject " + std::to_string(static_cast<int>(e.subject)) + ")";
            }
        }
    }
    out.unlocked = env.achievements().distinct_unlocked();
    return out;
}

}    // namespace

int main(int argc, char **argv) {
    CLI::App app{"search seeds for a planner playthrough that unlocks every achievement"};
    std::uint64_t first_seed = 0;
    int seeds = 50;
    int max_steps = 9000;
    std::string out;
    std::string config_path;
    app.add_option("--first-seed", first_seed, "first run seed to try")->capture_default_str();
    app.add_option("--seeds", seeds, "number of seeds to try")->capture_default_str();
    app.add_option("--max-steps", max_steps, "step cap per attempt")->capture_default_str();
    app.add_option("--config", config_path, "balance table file")->check(CLI::ExistingFile);
    app.add_option("--out", out, "script file to write")->required();
    CLI11_PARSE(app, argc, argv);

    try {
        const BalanceConfig cfg = config_path.empty() ? BalanceConfig{} : BalanceConfig::load(config_path);
        for (int i = 0; i < seeds; ++i) {
            const std::uint64_t seed = first_seed + static_cast<std::uint64_t>(i);
            const auto result = attempt(seed, cfg, max_steps);
            std::printf("seed %llu: %d/%d achievements in %zu steps%s\n", static_cast<unsigned long long>(seed),
                        result.unlocked, kNumAchievements, result.actions.size(), result.death.c_str());
            if (result.unlocked != kNumAchievements) {
                continue;
            }
            std::ofstream f(out);
            f << "# run seed " << seed << ", episode 0, " << result.actions.size() << " actions\n";
            for (std::size_t t = 0; t < result.actions.size(); ++t) {
                f << action_name(result.actions[t]) << ((t + 1) % 16 == 0 ? '\n' : ' ');
            }
            f << '\n';
            if (!f) {
                throw CraftError(ErrorCode::io_failure, "cannot write " + out);
            }
            return 0;
        }
    } catch (const CraftError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    std::fprintf(stderr, "no seed unlocked every achievement\n");
    return 1;
}
