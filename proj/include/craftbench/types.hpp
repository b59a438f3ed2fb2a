#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <string_view>

namespace craftbench {

inline constexpr int kWorldSize = 64;
inline constexpr int kNumCells = kWorldSize * kWorldSize;
inline constexpr int kMaxLevel = 9;

// Cell contents of the world grid.
enum class Material : std::uint8_t {
    water,
    sand,
    grass,
    tree,
    path,
    stone,
    coal,
    iron,
    diamond,
    lava,
    table,
    furnace,
    plant,
};
inline constexpr int kNumMaterials = 13;

auto material_name(Material m) noexcept -> std::string_view;

// Player may stand on these (lava is enterable but lethal, handled separately).
constexpr auto is_walkable(Material m) noexcept -> bool {
    return m == Material::grass || m == Material::sand || m == Material::path;
}

struct Pos {
    int x = 0;
    int y = 0;

    constexpr auto operator==(const Pos &) const noexcept -> bool = default;
    constexpr auto operator+(Pos o) const noexcept -> Pos { return {x + o.x, y + o.y}; }
    constexpr auto operator-(Pos o) const noexcept -> Pos { return {x - o.x, y - o.y}; }
};

constexpr auto in_bounds(Pos p) noexcept -> bool {
    return p.x >= 0 && p.y >= 0 && p.x < kWorldSize && p.y < kWorldSize;
}

// The outermost ring of cells is an immutable, impassable barrier.
constexpr auto in_interior(Pos p) noexcept -> bool {
    return p.x >= 1 && p.y >= 1 && p.x < kWorldSize - 1 && p.y < kWorldSize - 1;
}

constexpr auto cell_index(Pos p) noexcept -> int {
    return p.y * kWorldSize + p.x;
}

constexpr auto chebyshev(Pos a, Pos b) noexcept -> int {
    const int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
    const int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
    return dx > dy ? dx : dy;
}

constexpr auto manhattan(Pos a, Pos b) noexcept -> int {
    return (a.x > b.x ? a.x - b.x : b.x - a.x) + (a.y > b.y ? a.y - b.y : b.y - a.y);
}

// Screen orientation: north is -y.
enum class Direction : std::uint8_t { north, south, east, west };

constexpr auto offset(Direction d) noexcept -> Pos {
    switch (d) {
        case Direction::north:
            return {0, -1};
        case Direction::south:
            return {0, 1};
        case Direction::east:
            return {1, 0};
        case Direction::west:
            return {-1, 0};
    }
    return {0, 0};
}

constexpr auto opposite(Direction d) noexcept -> Direction {
    switch (d) {
        case Direction::north:
            return Direction::south;
        case Direction::south:
            return Direction::north;
        case Direction::east:
            return Direction::west;
        case Direction::west:
            return Direction::east;
    }
    return d;
}

inline constexpr std::array<Direction, 4> kDirections = {Direction::north, Direction::south, Direction::east,
                                                         Direction::west};

// Inventory slots, in HUD order after the four vitals.
enum class Item : std::uint8_t {
    sapling,
    wood,
    stone,
    coal,
    iron,
    diamond,
    wood_pickaxe,
    stone_pickaxe,
    iron_pickaxe,
    wood_sword,
    stone_sword,
    iron_sword,
};
inline constexpr int kNumItems = 12;

auto item_name(Item item) noexcept -> std::string_view;

enum class Vital : std::uint8_t { health, food, water, energy };
inline constexpr int kNumVitals = 4;

auto vital_name(Vital v) noexcept -> std::string_view;

}    // namespace craftbench
