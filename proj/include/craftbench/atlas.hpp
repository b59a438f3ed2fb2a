#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "craftbench/types.hpp"
#include "craftbench/world.hpp"

namespace craftbench {

inline constexpr int kSpriteSize = 16;
inline constexpr int kTileSize = 7;

// Sprite ids. The first kNumMaterials entries mirror Material.
enum class Sprite : std::uint8_t {
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
    plant_ripe,
    player_down,
    player_up,
    player_left,
    player_right,
    player_sleep,
    cow,
    zombie,
    skeleton,
    arrow_north,
    arrow_south,
    arrow_east,
    arrow_west,
    icon_health,
    icon_food,
    icon_drink,
    icon_energy,
    icon_sapling,
    icon_wood,
    icon_stone,
    icon_coal,
    icon_iron,
    icon_diamond,
    icon_wood_pickaxe,
    icon_stone_pickaxe,
    icon_iron_pickaxe,
    icon_wood_sword,
    icon_stone_sword,
    icon_iron_sword,
    digit_0,
    digit_1,
    digit_2,
    digit_3,
    digit_4,
    digit_5,
    digit_6,
    digit_7,
    digit_8,
    digit_9,
};
inline constexpr int kNumSprites = static_cast<int>(Sprite::digit_9) + 1;

constexpr auto material_sprite(Material m) noexcept -> Sprite {
    return static_cast<Sprite>(m);
}

auto item_icon(Item item) noexcept -> Sprite;
auto vital_icon(Vital v) noexcept -> Sprite;

// RGBA, row-major. Alpha is 0 or 255.
using SpritePixels = std::array<std::uint8_t, kSpriteSize * kSpriteSize * 4>;
using TilePixels = std::array<std::uint8_t, kTileSize * kTileSize * 4>;

// 3x5 glyph: bit (row * 3 + col) set means ink, row 0 on top.
using Glyph = std::uint16_t;

// Every sprite the renderers need, at full 16x16 resolution and
// box-filtered down to the 7x7 observation tile.
class TextureAtlas {
public:
    // The embedded atlas. Built once; immutable afterwards.
    static auto builtin() -> const TextureAtlas &;

    auto sprite(Sprite s) const noexcept -> const SpritePixels & { return sprites_[static_cast<std::size_t>(s)]; }
    auto tile(Sprite s) const noexcept -> const TilePixels & { return tiles_[static_cast<std::size_t>(s)]; }

    static auto digit_glyph(int digit) noexcept -> Glyph;

    // FNV-1a 64 over all sprite bytes.
    auto content_hash() const noexcept -> std::uint64_t;

private:
    TextureAtlas();

    std::array<SpritePixels, kNumSprites> sprites_{};
    std::array<TilePixels, kNumSprites> tiles_{};
};

// Sprite for a creature; plants pick ripe/unripe, arrows their direction.
auto creature_sprite(const Creature &c, int ripen_ticks) noexcept -> Sprite;
auto player_sprite(const Player &p) noexcept -> Sprite;

}    // namespace craftbench
