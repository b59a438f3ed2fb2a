#include "craftbench/worldgen.hpp"

#include <cmath>
#include <deque>
#include <initializer_list>

#include "craftbench/error.hpp"
#include "craftbench/noise.hpp"
#include "craftbench/rng.hpp"

namespace craftbench {

namespace {

// Independent noise fields, one permutation each.
enum Channel : int { kMountain, kCoal, kIron, kWater, kSand, kTrees, kCaves, kTunnels, kSpawn, kNumChannels };

struct Octave {
    double size;
    double weight;
};

class NoiseBank {
public:
    explicit NoiseBank(std::uint64_t seed) {
        fields_.reserve(kNumChannels);
        for (int c = 0; c < kNumChannels; ++c) {
            fields_.emplace_back(mix64(seed + kGoldenGamma * static_cast<std::uint64_t>(c + 1)));
        }
    }

    // Weighted sum of octaves sampled at (x/size, y/size); optionally
    // normalized by the total weight.
    auto sample(Channel c, double x, double y, std::initializer_list<Octave> octaves, bool normalize = true) const
        -> double {
        double value = 0.0;
        double total = 0.0;
        for (const auto &o : octaves) {
            value += o.weight * fields_[static_cast<std::size_t>(c)](x / o.size, y / o.size);
            total += o.weight;
        }
        return normalize ? value / total : value;
    }

    auto sample(Channel c, double x, double y, double size) const -> double {
        return fields_[static_cast<std::size_t>(c)](x / size, y / size);
    }

private:
    std::vector<OpenSimplex2D> fields_;
};

constexpr Pos kCenter{kWorldSize / 2, kWorldSize / 2};

auto place_terrain(GeneratedWorld &out, const NoiseBank &noise, Rng &rng, const BalanceConfig &cfg) -> void {
    auto &grid = out.grid;
    for (int x = 0; x < kWorldSize; ++x) {
        for (int y = 0; y < kWorldSize; ++y) {
            const auto xd = static_cast<double>(x);
            const auto yd = static_cast<double>(y);
            const auto idx = static_cast<std::size_t>(cell_index({x, y}));

            // Soft disc of open grassland around the spawn area.
            const double dist = std::hypot(xd - kCenter.x, yd - kCenter.y);
            const double wobble = 2.0 * noise.sample(kSpawn, xd, yd, 3.0);
            const double start = 1.0 / (1.0 + std::exp(dist - cfg.spawn_clear_radius - wobble));
            // Mountains keep a wider berth so stone is a trek away from spawn.
            const double foothills = 1.0 / (1.0 + std::exp(dist - cfg.mountain_clear_radius - wobble));

            double water = noise.sample(kWater, xd, yd, {{15.0, 1.0}, {5.0, 0.15}}, false) + 0.1;
            water -= 2.0 * start;
            double mountain = noise.sample(kMountain, xd, yd, {{15.0, 1.0}, {5.0, 0.3}});
            mountain -= 4.0 * foothills + 0.3 * water;

            Material m = Material::grass;
            Region region = Region::grassland;
            bool cave = false;
            if (start > 0.5) {
                m = Material::grass;
            } else if (mountain > cfg.mountain_threshold) {
                region = Region::mountain;
                if (noise.sample(kCaves, xd, yd, 7.0) > cfg.cave_threshold && mountain > cfg.cave_min_mountain) {
                    m = Material::path;
                    cave = true;
                } else if (noise.sample(kTunnels, 2.0 * xd, yd / 5.0, 3.0) > cfg.tunnel_threshold) {
                    m = Material::path;
                    cave = true;
                } else if (noise.sample(kTunnels, xd / 5.0, 2.0 * yd, 3.0) > cfg.tunnel_threshold) {
                    m = Material::path;
                    cave = true;
                } else if (noise.sample(kCoal, xd, yd, 8.0) > cfg.coal_noise_threshold &&
                           rng.uniform() < cfg.coal_density) {
                    m = Material::coal;
                } else if (noise.sample(kIron, xd, yd, 6.0) > cfg.iron_noise_threshold &&
                           rng.uniform() < cfg.iron_density) {
                    m = Material::iron;
                } else if (mountain > cfg.diamond_min_mountain && rng.uniform() < cfg.diamond_density) {
                    m = Material::diamond;
                } else if (mountain > cfg.lava_min_mountain &&
                           noise.sample(kCaves, xd, yd, 5.0) > cfg.lava_noise_threshold) {
                    m = Material::lava;
                } else {
                    m = Material::stone;
                }
            } else if (water > cfg.sand_low && water <= cfg.sand_high &&
                       noise.sample(kSand, xd, yd, 9.0) > -0.2) {
                m = Material::sand;
                region = Region::shore;
            } else if (water > cfg.water_threshold) {
                m = Material::water;
                region = Region::lake;
            } else if (noise.sample(kTrees, xd, yd, 7.0) > cfg.tree_noise_threshold && rng.uniform() < cfg.tree_density) {
                m = Material::tree;
            }
            grid.cells[idx] = m;
            grid.regions[idx] = region;
            grid.caves[idx] = cave ? 1 : 0;
        }
    }
}

auto find_spawn(const WorldGrid &grid) -> Pos {
    Pos best = kCenter;
    int best_d2 = -1;
    for (int y = 1; y < kWorldSize - 1; ++y) {
        for (int x = 1; x < kWorldSize - 1; ++x) {
            if (!is_walkable(grid.at({x, y}))) {
                continue;
            }
            const int d2 = (x - kCenter.x) * (x - kCenter.x) + (y - kCenter.y) * (y - kCenter.y);
            if (best_d2 < 0 || d2 < best_d2) {
                best_d2 = d2;
                best = {x, y};
            }
        }
    }
    return best;
}

auto place_creatures(GeneratedWorld &out, Rng &rng, const BalanceConfig &cfg) -> void {
    const auto &grid = out.grid;
    std::array<bool, kNumCells> taken{};
    taken[static_cast<std::size_t>(cell_index(grid.spawn))] = true;
    for (int x = 1; x < kWorldSize - 1; ++x) {
        for (int y = 1; y < kWorldSize - 1; ++y) {
            const Pos p{x, y};
            const auto idx = static_cast<std::size_t>(cell_index(p));
            const Material m = grid.cells[idx];
            if (taken[idx] || !is_walkable(m)) {
                continue;
            }
            const double dist = std::hypot(static_cast<double>(x - grid.spawn.x), static_cast<double>(y - grid.spawn.y));
            std::optional<CreatureKind> kind;
            if (m == Material::grass && dist >= cfg.cow_min_distance && rng.uniform() < cfg.cow_density) {
                kind = CreatureKind::cow;
            } else if (m == Material::grass && dist >= cfg.zombie_min_distance && rng.uniform() < cfg.zombie_density) {
                kind = CreatureKind::zombie;
            } else if (m == Material::path && grid.caves[idx] != 0 && rng.uniform() < cfg.skeleton_density) {
                kind = CreatureKind::skeleton;
            }
            if (kind) {
                out.creatures.push_back({*kind, p});
                taken[idx] = true;
            }
        }
    }
}

auto is_passable_with_tools(Material m) noexcept -> bool {
    switch (m) {
        case Material::grass:
        case Material::sand:
        case Material::path:
        case Material::stone:
        case Material::coal:
        case Material::iron:
        case Material::diamond:
            return true;
        default:
            return false;
    }
}

}    // namespace

auto synthesize_world(std::uint64_t seed, const BalanceConfig &config) -> GeneratedWorld {
    const auto base = stream_seed(seed, Stream::worldgen);
    const NoiseBank noise(base);
    Rng rng(base);

    GeneratedWorld out;
    place_terrain(out, noise, rng, config);
    out.grid.spawn = find_spawn(out.grid);
    place_creatures(out, rng, config);
    return out;
}

auto has_required_materials(const WorldGrid &grid) noexcept -> bool {
    std::array<bool, kNumMaterials> seen{};
    for (auto m : grid.cells) {
        seen[static_cast<std::size_t>(m)] = true;
    }
    for (auto m : {Material::water, Material::tree, Material::stone, Material::coal, Material::iron, Material::diamond}) {
        if (!seen[static_cast<std::size_t>(m)]) {
            return false;
        }
    }
    return true;
}

auto diamond_reachable(const WorldGrid &grid) -> bool {
    std::array<bool, kNumCells> visited{};
    std::deque<Pos> frontier{grid.spawn};
    visited[static_cast<std::size_t>(cell_index(grid.spawn))] = true;
    while (!frontier.empty()) {
        const Pos p = frontier.front();
        frontier.pop_front();
        for (auto d : kDirections) {
            const Pos q = p + offset(d);
            if (!in_interior(q)) {
                continue;
            }
            const auto qi = static_cast<std::size_t>(cell_index(q));
            if (visited[qi] || !is_passable_with_tools(grid.cells[qi])) {
                continue;
            }
            if (grid.cells[qi] == Material::diamond) {
                return true;
            }
            visited[qi] = true;
            frontier.push_back(q);
        }
    }
    return false;
}

auto generate_world(std::uint64_t episode_seed, const BalanceConfig &config) -> GeneratedWorld {
    for (int attempt = 0; attempt < config.worldgen_max_attempts; ++attempt) {
        const auto seed = attempt == 0 ? episode_seed : mix64(episode_seed + kGoldenGamma * static_cast<std::uint64_t>(attempt));
        auto world = synthesize_world(seed, config);
        if (is_walkable(world.grid.at(world.grid.spawn)) && has_required_materials(world.grid) &&
            diamond_reachable(world.grid)) {
            world.attempts = attempt + 1;
            return world;
        }
    }
    throw CraftError(ErrorCode::retry_exhausted,
                     "no valid world after " + std::to_string(config.worldgen_max_attempts) + " attempts");
}

auto make_world_state(const GeneratedWorld &world, std::uint64_t episode_seed, const BalanceConfig &config)
    -> WorldState {
    WorldState state;
    state.grid() = world.grid.cells;
    for (int i = 0; i < kNumCells; ++i) {
        const Pos p{i % kWorldSize, i / kWorldSize};
        state.set_cave(p, world.grid.caves[static_cast<std::size_t>(i)] != 0);
    }
    state.seed_streams(episode_seed);
    state.move_player(world.grid.spawn);
    for (const auto &c : world.creatures) {
        Creature creature{c.kind, c.pos};
        switch (c.kind) {
            case CreatureKind::cow:
                creature.health = config.cow_health;
                break;
            case CreatureKind::zombie:
                creature.health = config.zombie_health;
                break;
            case CreatureKind::skeleton:
                creature.health = config.skeleton_health;
                break;
            default:
                creature.health = 1;
                break;
        }
        state.add_creature(creature);
    }
    return state;
}

}    // namespace craftbench
