#include "craftbench/sim.hpp"

#include <algorithm>
#include <array>

namespace craftbench {

namespace {

auto clamp_level(int v) noexcept -> int {
    return std::clamp(v, 0, kMaxLevel);
}

auto direction_for(Action a) noexcept -> std::optional<Direction> {
    switch (a) {
        case Action::move_left:
            return Direction::west;
        case Action::move_right:
            return Direction::east;
        case Action::move_up:
            return Direction::north;
        case Action::move_down:
            return Direction::south;
        default:
            return std::nullopt;
    }
}

// Direction along the dominant axis from `from` to `to`; horizontal wins ties.
auto toward(Pos from, Pos to) noexcept -> Direction {
    const Pos d = to - from;
    const int ax = d.x < 0 ? -d.x : d.x;
    const int ay = d.y < 0 ? -d.y : d.y;
    if (ax >= ay && d.x != 0) {
        return d.x > 0 ? Direction::east : Direction::west;
    }
    return d.y > 0 ? Direction::south : Direction::north;
}

auto random_direction(Rng &rng) noexcept -> Direction {
    return kDirections[rng.below(4)];
}

auto creature_can_enter(CreatureKind kind, Material m) noexcept -> bool {
    switch (kind) {
        case CreatureKind::cow:
        case CreatureKind::zombie:
            return m == Material::grass || m == Material::sand || m == Material::path;
        case CreatureKind::skeleton:
            return m == Material::path;
        case CreatureKind::arrow:
            return is_walkable(m);
        case CreatureKind::plant:
            return false;
    }
    return false;
}

auto try_move(WorldState &state, std::size_t index, Direction dir) noexcept -> bool {
    const auto &c = state.creatures()[index];
    const Pos target = c.pos + offset(dir);
    if (!in_interior(target) || !state.is_free(target) || !creature_can_enter(c.kind, state.material(target))) {
        return false;
    }
    state.move_creature(index, target);
    return true;
}

void add_vital(Player &p, Vital v, int amount) noexcept {
    p.vital(v) = clamp_level(p.vital(v) + amount);
}

auto tool_subject(Item tool) noexcept -> Subject {
    switch (tool) {
        case Item::wood_pickaxe:
            return Subject::wood_pickaxe;
        case Item::stone_pickaxe:
            return Subject::stone_pickaxe;
        case Item::iron_pickaxe:
            return Subject::iron_pickaxe;
        case Item::wood_sword:
            return Subject::wood_sword;
        case Item::stone_sword:
            return Subject::stone_sword;
        case Item::iron_sword:
            return Subject::iron_sword;
        default:
            return Subject::none;
    }
}

struct Cost {
    Item item;
    int amount;
};

struct Recipe {
    Item tool;
    bool needs_furnace;
    std::array<Cost, 3> costs;
    int num_costs;
};

auto recipe_for(Action a, const BalanceConfig &cfg) noexcept -> std::optional<Recipe> {
    switch (a) {
        case Action::make_wood_pickaxe:
            return Recipe{Item::wood_pickaxe, false, {{{Item::wood, cfg.wood_pickaxe_wood}}}, 1};
        case Action::make_wood_sword:
            return Recipe{Item::wood_sword, false, {{{Item::wood, cfg.wood_sword_wood}}}, 1};
        case Action::make_stone_pickaxe:
            return Recipe{Item::stone_pickaxe,
                          false,
                          {{{Item::wood, cfg.stone_pickaxe_wood}, {Item::stone, cfg.stone_pickaxe_stone}}},
                          2};
        case Action::make_stone_sword:
            return Recipe{
                Item::stone_sword, false, {{{Item::wood, cfg.stone_sword_wood}, {Item::stone, cfg.stone_sword_stone}}}, 2};
        case Action::make_iron_pickaxe:
            return Recipe{Item::iron_pickaxe,
                          true,
                          {{{Item::wood, cfg.iron_pickaxe_wood},
                            {Item::coal, cfg.iron_pickaxe_coal},
                            {Item::iron, cfg.iron_pickaxe_iron}}},
                          3};
        case Action::make_iron_sword:
            return Recipe{Item::iron_sword,
                          true,
                          {{{Item::wood, cfg.iron_sword_wood},
                            {Item::coal, cfg.iron_sword_coal},
                            {Item::iron, cfg.iron_sword_iron}}},
                          3};
        default:
            return std::nullopt;
    }
}

void make_tool(WorldState &state, const Recipe &recipe, const BalanceConfig &cfg, EventList &events) {
    auto &p = state.player();
    if (!is_nearby(state, Material::table, cfg)) {
        return;
    }
    if (recipe.needs_furnace && !is_nearby(state, Material::furnace, cfg)) {
        return;
    }
    for (int i = 0; i < recipe.num_costs; ++i) {
        const auto &cost = recipe.costs[static_cast<std::size_t>(i)];
        if (p.count(cost.item) < cost.amount) {
            return;
        }
    }
    for (int i = 0; i < recipe.num_costs; ++i) {
        const auto &cost = recipe.costs[static_cast<std::size_t>(i)];
        p.count(cost.item) -= cost.amount;
    }
    p.count(recipe.tool) += 1;
    events.push_back({EventKind::made, tool_subject(recipe.tool)});
}

void place(WorldState &state, Action action, const BalanceConfig &cfg, EventList &events) {
    auto &p = state.player();
    const Pos target = p.facing_pos();
    if (!in_interior(target) || !state.is_free(target)) {
        return;
    }
    const Material under = state.material(target);
    const bool flat = under == Material::grass || under == Material::sand || under == Material::path;
    switch (action) {
        case Action::place_stone:
            if ((flat || under == Material::water || under == Material::lava) &&
                p.count(Item::stone) >= cfg.place_stone_cost) {
                p.count(Item::stone) -= cfg.place_stone_cost;
                state.set_material(target, Material::stone);
                events.push_back({EventKind::placed, Subject::stone});
            }
            break;
        case Action::place_table:
            if (flat && p.count(Item::wood) >= cfg.table_wood) {
                p.count(Item::wood) -= cfg.table_wood;
                state.set_material(target, Material::table);
                events.push_back({EventKind::placed, Subject::table});
            }
            break;
        case Action::place_furnace:
            if (flat && p.count(Item::stone) >= cfg.furnace_stone) {
                p.count(Item::stone) -= cfg.furnace_stone;
                state.set_material(target, Material::furnace);
                events.push_back({EventKind::placed, Subject::furnace});
            }
            break;
        case Action::place_plant:
            if (under == Material::grass && p.count(Item::sapling) >= cfg.plant_sapling_cost) {
                p.count(Item::sapling) -= cfg.plant_sapling_cost;
                state.set_material(target, Material::plant);
                state.add_creature({CreatureKind::plant, target, 1, 0});
                events.push_back({EventKind::placed, Subject::plant});
            }
            break;
        default:
            break;
    }
}

void attack(WorldState &state, Creature &target, const BalanceConfig &cfg, EventList &events) {
    auto &p = state.player();
    const auto index = static_cast<std::size_t>(state.occupant(target.pos));
    switch (target.kind) {
        case CreatureKind::cow:
            target.health -= player_damage(p, cfg);
            if (target.health <= 0) {
                state.remove_creature(index);
                add_vital(p, Vital::food, cfg.cow_food);
                events.push_back({EventKind::ate, Subject::cow});
            }
            break;
        case CreatureKind::zombie:
        case CreatureKind::skeleton:
            target.health -= player_damage(p, cfg);
            if (target.health <= 0) {
                const auto subject = target.kind == CreatureKind::zombie ? Subject::zombie : Subject::skeleton;
                state.remove_creature(index);
                events.push_back({EventKind::defeated, subject});
            }
            break;
        case CreatureKind::plant:
            if (target.timer >= cfg.plant_ripen_ticks) {
                target.timer = 0;
                add_vital(p, Vital::food, cfg.plant_food);
                events.push_back({EventKind::ate, Subject::plant});
            }
            break;
        case CreatureKind::arrow:
            break;
    }
}

void collect(WorldState &state, Pos target, const BalanceConfig &cfg, EventList &events) {
    auto &p = state.player();
    const Material m = state.material(target);
    if (m == Material::water) {
        add_vital(p, Vital::water, cfg.drink_amount);
        events.push_back({EventKind::drank, Subject::none});
        return;
    }
    if (!in_interior(target)) {
        return;
    }
    auto mine = [&](Item required, Item gained, Subject subject) {
        if (p.count(required) < 1) {
            return;
        }
        p.count(gained) += 1;
        state.set_material(target, Material::path);
        events.push_back({EventKind::collected, subject});
    };
    switch (m) {
        case Material::grass:
            if (state.interaction_rng.chance(cfg.sapling_probability)) {
                p.count(Item::sapling) += 1;
                events.push_back({EventKind::collected, Subject::sapling});
            }
            break;
        case Material::tree:
            p.count(Item::wood) += 1;
            events.push_back({EventKind::collected, Subject::wood});
            break;
        case Material::stone:
            mine(Item::wood_pickaxe, Item::stone, Subject::stone);
            break;
        case Material::coal:
            mine(Item::wood_pickaxe, Item::coal, Subject::coal);
            break;
        case Material::iron:
            mine(Item::stone_pickaxe, Item::iron, Subject::iron);
            break;
        case Material::diamond:
            mine(Item::iron_pickaxe, Item::diamond, Subject::diamond);
            break;
        default:
            break;
    }
}

void interact(WorldState &state, const BalanceConfig &cfg, EventList &events) {
    const Pos target = state.player().facing_pos();
    if (!in_bounds(target)) {
        return;
    }
    if (auto *c = state.creature_at(target); c != nullptr) {
        attack(state, *c, cfg, events);
        return;
    }
    collect(state, target, cfg, events);
}

void move_player(WorldState &state, Direction dir, EventList &events) {
    auto &p = state.player();
    p.facing = dir;
    const Pos target = p.pos + offset(dir);
    if (!in_interior(target) || !state.is_free(target)) {
        return;
    }
    const Material m = state.material(target);
    if (is_walkable(m)) {
        state.move_player(target);
    } else if (m == Material::lava) {
        state.move_player(target);
        damage_player(state, p.health(), Subject::lava, events);
    }
}

void update_zombie(WorldState &state, std::size_t index, const BalanceConfig &cfg, EventList &events, int &damage) {
    auto &rng = state.creature_rng;
    auto &z = state.creatures()[index];
    const Pos player = state.player().pos;
    if (manhattan(z.pos, player) == 1) {
        if (z.timer > 0) {
            --z.timer;
        } else {
            const int before = state.player().health();
            damage_player(state, cfg.zombie_damage, Subject::zombie, events);
            damage += before - state.player().health();
            z.timer = cfg.zombie_cooldown;
        }
        return;
    }
    if (z.timer > 0) {
        --z.timer;
    }
    if (chebyshev(z.pos, player) <= cfg.zombie_aggro_radius && rng.chance(cfg.zombie_chase_probability)) {
        try_move(state, index, toward(z.pos, player));
    } else if (rng.chance(cfg.zombie_move_probability)) {
        try_move(state, index, random_direction(rng));
    }
}

void update_skeleton(WorldState &state, std::size_t index, const BalanceConfig &cfg, EventList &events, int &damage) {
    auto &rng = state.creature_rng;
    auto &s = state.creatures()[index];
    const Pos player = state.player().pos;
    if (s.timer > 0) {
        --s.timer;
    }
    const Pos d = player - s.pos;
    const bool aligned = d.x == 0 || d.y == 0;
    const int dist = chebyshev(s.pos, player);
    if (aligned && manhattan(s.pos, player) <= cfg.skeleton_shoot_range && s.timer == 0 &&
        rng.chance(cfg.skeleton_shoot_probability)) {
        s.facing = toward(s.pos, player);
        s.timer = cfg.skeleton_reload;
        const Pos launch = s.pos + offset(s.facing);
        if (launch == player) {
            const int before = state.player().health();
            damage_player(state, cfg.arrow_damage, Subject::arrow, events);
            damage += before - state.player().health();
        } else if (in_interior(launch) && state.is_free(launch) && is_walkable(state.material(launch))) {
            const Direction facing = s.facing;
            state.add_creature({CreatureKind::arrow, launch, 1, 0, facing});
        }
        return;
    }
    if (dist <= cfg.skeleton_keep_distance && rng.chance(cfg.skeleton_retreat_probability)) {
        try_move(state, index, opposite(toward(s.pos, player)));
    } else if (dist <= cfg.skeleton_approach_radius && rng.chance(cfg.skeleton_approach_probability)) {
        try_move(state, index, toward(s.pos, player));
    } else if (rng.chance(cfg.skeleton_move_probability)) {
        try_move(state, index, random_direction(rng));
    }
}

void update_arrow(WorldState &state, std::size_t index, const BalanceConfig &cfg, EventList &events, int &damage) {
    const auto &a = state.creatures()[index];
    const Pos target = a.pos + offset(a.facing);
    if (target == state.player().pos) {
        const int before = state.player().health();
        damage_player(state, cfg.arrow_damage, Subject::arrow, events);
        damage += before - state.player().health();
        state.remove_creature(index);
    } else if (!try_move(state, index, a.facing)) {
        state.remove_creature(index);
    }
}

void update_plant(WorldState &state, std::size_t index, const BalanceConfig &cfg) {
    auto &c = state.creatures()[index];
    if (c.timer < cfg.plant_ripen_ticks) {
        ++c.timer;
    }
    for (auto d : kDirections) {
        const Pos q = c.pos + offset(d);
        const auto *other = in_bounds(q) ? state.creature_at(q) : nullptr;
        if (other != nullptr && other->kind == CreatureKind::zombie &&
            state.creature_rng.chance(cfg.plant_eaten_probability)) {
            state.set_material(c.pos, Material::grass);
            state.remove_creature(index);
            return;
        }
    }
}

}    // namespace

auto achievement_for(const Event &e) noexcept -> std::optional<Achievement> {
    switch (e.kind) {
        case EventKind::collected:
            switch (e.subject) {
                case Subject::sapling:
                    return Achievement::collect_sapling;
                case Subject::wood:
                    return Achievement::collect_wood;
                case Subject::stone:
                    return Achievement::collect_stone;
                case Subject::coal:
                    return Achievement::collect_coal;
                case Subject::iron:
                    return Achievement::collect_iron;
                case Subject::diamond:
                    return Achievement::collect_diamond;
                default:
                    return std::nullopt;
            }
        case EventKind::drank:
            return Achievement::collect_drink;
        case EventKind::defeated:
            if (e.subject == Subject::zombie) {
                return Achievement::defeat_zombie;
            }
            if (e.subject == Subject::skeleton) {
                return Achievement::defeat_skeleton;
            }
            return std::nullopt;
        case EventKind::ate:
            if (e.subject == Subject::cow) {
                return Achievement::eat_cow;
            }
            if (e.subject == Subject::plant) {
                return Achievement::eat_plant;
            }
            return std::nullopt;
        case EventKind::placed:
            switch (e.subject) {
                case Subject::stone:
                    return Achievement::place_stone;
                case Subject::table:
                    return Achievement::place_table;
                case Subject::furnace:
                    return Achievement::place_furnace;
                case Subject::plant:
                    return Achievement::place_plant;
                default:
                    return std::nullopt;
            }
        case EventKind::made:
            switch (e.subject) {
                case Subject::wood_pickaxe:
                    return Achievement::make_wood_pickaxe;
                case Subject::stone_pickaxe:
                    return Achievement::make_stone_pickaxe;
                case Subject::iron_pickaxe:
                    return Achievement::make_iron_pickaxe;
                case Subject::wood_sword:
                    return Achievement::make_wood_sword;
                case Subject::stone_sword:
                    return Achievement::make_stone_sword;
                case Subject::iron_sword:
                    return Achievement::make_iron_sword;
                default:
                    return std::nullopt;
            }
        case EventKind::woke_up:
            return Achievement::wake_up;
        case EventKind::damaged:
        case EventKind::died:
            return std::nullopt;
    }
    return std::nullopt;
}

auto is_nearby(const WorldState &state, Material m, const BalanceConfig &config) noexcept -> bool {
    const Pos c = state.player().pos;
    const int r = config.nearby_radius;
    for (int y = c.y - r; y <= c.y + r; ++y) {
        for (int x = c.x - r; x <= c.x + r; ++x) {
            if (in_bounds({x, y}) && state.material({x, y}) == m) {
                return true;
            }
        }
    }
    return false;
}

auto player_damage(const Player &player, const BalanceConfig &config) noexcept -> int {
    if (player.count(Item::iron_sword) > 0) {
        return config.damage_iron_sword;
    }
    if (player.count(Item::stone_sword) > 0) {
        return config.damage_stone_sword;
    }
    if (player.count(Item::wood_sword) > 0) {
        return config.damage_wood_sword;
    }
    return config.damage_bare;
}

void damage_player(WorldState &state, int amount, Subject cause, EventList &events) noexcept {
    auto &p = state.player();
    if (amount <= 0 || p.health() == 0) {
        return;
    }
    p.vital(Vital::health) = std::max(0, p.health() - amount);
    p.sleeping = false;
    events.push_back({EventKind::damaged, cause});
    if (p.health() == 0) {
        events.push_back({EventKind::died, cause});
    }
}

void apply_action(WorldState &state, Action action, const BalanceConfig &config, EventList &events) {
    auto &p = state.player();
    if (p.sleeping) {
        action = Action::noop;
    }
    if (const auto dir = direction_for(action)) {
        move_player(state, *dir, events);
        return;
    }
    switch (action) {
        case Action::noop:
            break;
        case Action::do_interact:
            interact(state, config, events);
            break;
        case Action::sleep:
            if (p.vital(Vital::energy) < kMaxLevel) {
                p.sleeping = true;
            }
            break;
        case Action::place_stone:
        case Action::place_table:
        case Action::place_furnace:
        case Action::place_plant:
            place(state, action, config, events);
            break;
        default:
            if (const auto recipe = recipe_for(action, config)) {
                make_tool(state, *recipe, config, events);
            }
            break;
    }
}

auto tick_vitals(WorldState &state, const BalanceConfig &config, EventList &events) -> int {
    auto &p = state.player();
    const int before = p.health();
    if (before == 0) {
        return 0;
    }

    if (++p.hunger_clock >= config.food_period) {
        p.hunger_clock = 0;
        add_vital(p, Vital::food, -1);
    }
    if (++p.thirst_clock >= config.water_period) {
        p.thirst_clock = 0;
        add_vital(p, Vital::water, -1);
    }
    if (p.sleeping) {
        if (++p.rest_clock >= config.sleep_energy_period) {
            p.rest_clock = 0;
            add_vital(p, Vital::energy, 1);
        }
    } else if (++p.fatigue_clock >= config.energy_period) {
        p.fatigue_clock = 0;
        add_vital(p, Vital::energy, -1);
    }

    const bool deprived = p.vital(Vital::food) == 0 || p.vital(Vital::water) == 0 || p.vital(Vital::energy) == 0;
    if (deprived) {
        p.regen_clock = 0;
        if (++p.degen_clock >= config.damage_period) {
            p.degen_clock = 0;
            p.vital(Vital::health) -= 1;
            events.push_back({EventKind::damaged, Subject::starvation});
            if (p.health() == 0) {
                events.push_back({EventKind::died, Subject::starvation});
            }
        }
    } else {
        p.degen_clock = 0;
        if (p.health() < kMaxLevel) {
            if (++p.regen_clock >= config.regen_period) {
                p.regen_clock = 0;
                add_vital(p, Vital::health, 1);
            }
        } else {
            p.regen_clock = 0;
        }
    }
    return p.health() - before;
}

auto tick_entities(WorldState &state, const BalanceConfig &config, EventList &events) -> int {
    int damage = 0;
    const std::size_t n = state.creatures().size();
    for (std::size_t i = 0; i < n; ++i) {
        auto &c = state.creatures()[i];
        if (!c.alive) {
            continue;
        }
        switch (c.kind) {
            case CreatureKind::cow:
                if (state.creature_rng.chance(config.cow_move_probability)) {
                    try_move(state, i, random_direction(state.creature_rng));
                }
                break;
            case CreatureKind::zombie:
                update_zombie(state, i, config, events, damage);
                break;
            case CreatureKind::skeleton:
                update_skeleton(state, i, config, events, damage);
                break;
            case CreatureKind::arrow:
                update_arrow(state, i, config, events, damage);
                break;
            case CreatureKind::plant:
                update_plant(state, i, config);
                break;
        }
    }
    state.compact();
    return damage;
}

auto zombie_target(const WorldState &state, const BalanceConfig &config) noexcept -> int {
    return config.zombie_target * (is_night(state, config) ? config.night_zombie_multiplier : 1);
}

void balance_spawns(WorldState &state, const BalanceConfig &config) {
    auto &rng = state.spawn_rng;
    const Pos player = state.player().pos;

    struct Population {
        CreatureKind kind;
        int target;
        int health;
    };
    const std::array<Population, 3> populations = {{
        {CreatureKind::zombie, zombie_target(state, config), config.zombie_health},
        {CreatureKind::skeleton, config.skeleton_target, config.skeleton_health},
        {CreatureKind::cow, config.cow_target, config.cow_health},
    }};

    for (const auto &pop : populations) {
        const int count = state.count_alive(pop.kind);
        if (count < pop.target && rng.chance(config.spawn_probability)) {
            for (int attempt = 0; attempt < config.spawn_attempts; ++attempt) {
                const Pos p{1 + static_cast<int>(rng.below(kWorldSize - 2)),
                            1 + static_cast<int>(rng.below(kWorldSize - 2))};
                const Pos d = p - player;
                const bool in_view = d.x >= -4 && d.x <= 4 && d.y >= -3 && d.y <= 3;
                if (in_view || chebyshev(p, player) < config.spawn_min_distance || !state.is_free(p)) {
                    continue;
                }
                const Material m = state.material(p);
                const bool habitat = pop.kind == CreatureKind::skeleton ? (m == Material::path && state.is_cave(p))
                                                                        : m == Material::grass;
                if (!habitat) {
                    continue;
                }
                state.add_creature({pop.kind, p, pop.health, 0});
                break;
            }
        } else if (count > pop.target && rng.chance(config.despawn_probability)) {
            auto pick = static_cast<int>(rng.below(static_cast<std::uint32_t>(count)));
            auto &creatures = state.creatures();
            for (std::size_t i = 0; i < creatures.size(); ++i) {
                if (!creatures[i].alive || creatures[i].kind != pop.kind) {
                    continue;
                }
                if (pick-- == 0) {
                    if (chebyshev(creatures[i].pos, player) >= config.despawn_min_distance) {
                        state.remove_creature(i);
                    }
                    break;
                }
            }
        }
    }
    state.compact();
}

auto is_night(const WorldState &state, const BalanceConfig &config) noexcept -> bool {
    return state.day_tick() >= config.day_length - config.night_length;
}

auto daylight_phase(const WorldState &state, const BalanceConfig &config) noexcept -> double {
    return static_cast<double>(state.day_tick()) / static_cast<double>(config.day_length);
}

auto light_level(const WorldState &state, const BalanceConfig &config) noexcept -> double {
    return is_night(state, config) ? config.night_darkening : 1.0;
}

void advance_daylight(WorldState &state, const BalanceConfig &config, EventList &events) {
    state.set_day_tick((state.day_tick() + 1) % config.day_length);
    auto &p = state.player();
    if (p.sleeping && p.vital(Vital::energy) >= kMaxLevel && !is_night(state, config)) {
        p.sleeping = false;
        events.push_back({EventKind::woke_up, Subject::none});
    }
}

}    // namespace craftbench
