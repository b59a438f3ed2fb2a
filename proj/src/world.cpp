#include "craftbench/world.hpp"

#include <algorithm>

namespace craftbench {

auto creature_name(CreatureKind kind) noexcept -> std::string_view {
    switch (kind) {
        case CreatureKind::cow:
            return "cow";
        case CreatureKind::zombie:
            return "zombie";
        case CreatureKind::skeleton:
            return "skeleton";
        case CreatureKind::arrow:
            return "arrow";
        case CreatureKind::plant:
            return "plant";
    }
    return "unknown";
}

WorldState::WorldState() {
    grid_.fill(Material::grass);
    occupancy_.fill(kEmptyCell);
    creatures_.reserve(128);
}

auto WorldState::uniform(Material fill, Pos player_pos, std::uint64_t seed) -> WorldState {
    WorldState w;
    w.grid_.fill(fill);
    w.seed_streams(seed);
    w.move_player(player_pos);
    return w;
}

void WorldState::seed_streams(std::uint64_t episode_seed) noexcept {
    episode_seed_ = episode_seed;
    creature_rng.reseed(stream_seed(episode_seed, Stream::creatures));
    spawn_rng.reseed(stream_seed(episode_seed, Stream::spawning));
    view_rng.reseed(stream_seed(episode_seed, Stream::view_noise));
    interaction_rng.reseed(stream_seed(episode_seed, Stream::interaction));
}

auto WorldState::creature_at(Pos p) noexcept -> Creature * {
    const auto occ = occupant(p);
    return occ >= 0 ? &creatures_[static_cast<std::size_t>(occ)] : nullptr;
}

auto WorldState::creature_at(Pos p) const noexcept -> const Creature * {
    const auto occ = occupant(p);
    return occ >= 0 ? &creatures_[static_cast<std::size_t>(occ)] : nullptr;
}

auto WorldState::count_alive(CreatureKind kind) const noexcept -> int {
    return static_cast<int>(
        std::count_if(creatures_.begin(), creatures_.end(), [&](const Creature &c) { return c.alive && c.kind == kind; }));
}

auto WorldState::add_creature(Creature c) -> std::optional<std::size_t> {
    if (!in_bounds(c.pos) || !is_free(c.pos)) {
        return std::nullopt;
    }
    const auto index = creatures_.size();
    occupancy_[static_cast<std::size_t>(cell_index(c.pos))] = static_cast<std::int16_t>(index);
    creatures_.push_back(c);
    return index;
}

void WorldState::remove_creature(std::size_t index) noexcept {
    auto &c = creatures_[index];
    if (!c.alive) {
        return;
    }
    c.alive = false;
    occupancy_[static_cast<std::size_t>(cell_index(c.pos))] = kEmptyCell;
}

void WorldState::move_creature(std::size_t index, Pos to) noexcept {
    auto &c = creatures_[index];
    occupancy_[static_cast<std::size_t>(cell_index(c.pos))] = kEmptyCell;
    c.pos = to;
    occupancy_[static_cast<std::size_t>(cell_index(to))] = static_cast<std::int16_t>(index);
}

void WorldState::compact() {
    const bool any_dead = std::any_of(creatures_.begin(), creatures_.end(), [](const Creature &c) { return !c.alive; });
    if (!any_dead) {
        return;
    }
    std::erase_if(creatures_, [](const Creature &c) { return !c.alive; });
    for (std::size_t i = 0; i < creatures_.size(); ++i) {
        occupancy_[static_cast<std::size_t>(cell_index(creatures_[i].pos))] = static_cast<std::int16_t>(i);
    }
}

void WorldState::move_player(Pos to) noexcept {
    auto &slot = occupancy_[static_cast<std::size_t>(cell_index(player_.pos))];
    if (slot == kPlayerCell) {
        slot = kEmptyCell;
    }
    player_.pos = to;
    occupancy_[static_cast<std::size_t>(cell_index(to))] = kPlayerCell;
}

}    // namespace craftbench
