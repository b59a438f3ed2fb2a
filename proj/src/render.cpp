#include "craftbench/render.hpp"

#include <algorithm>
#include <cmath>

#include "craftbench/sim.hpp"

namespace craftbench {

namespace {

constexpr int kStride = kObsSize * 3;

void blit_tile(Observation &out, const TilePixels &tile, int x0, int y0, bool opaque) noexcept {
    for (int y = 0; y < kTileSize; ++y) {
        auto *dst = out.data() + (y0 + y) * kStride + x0 * 3;
        const auto *src = tile.data() + y * kTileSize * 4;
        for (int x = 0; x < kTileSize; ++x, dst += 3, src += 4) {
            if (opaque || src[3] != 0) {
                dst[0] = src[0];
                dst[1] = src[1];
                dst[2] = src[2];
            }
        }
    }
}

void draw_digit(Observation &out, int digit, int x0, int y0) noexcept {
    const Glyph g = TextureAtlas::digit_glyph(digit);
    for (int y = 0; y < 5; ++y) {
        for (int x = 0; x < 3; ++x) {
            if ((g >> (y * 3 + x)) & 1U) {
                auto *dst = out.data() + (y0 + y) * kStride + (x0 + x) * 3;
                dst[0] = dst[1] = dst[2] = 255;
            }
        }
    }
}

void draw_view(const WorldState &state, const BalanceConfig &config, const TextureAtlas &atlas, Observation &out) {
    const Pos center = state.player().pos;
    for (int row = 0; row < kViewRows; ++row) {
        for (int col = 0; col < kViewCols; ++col) {
            const Pos p = view_cell(center, col, row);
            if (!in_bounds(p)) {
                continue;
            }
            blit_tile(out, atlas.tile(material_sprite(state.material(p))), col * kTileSize, row * kTileSize, true);
        }
    }
    const Pos origin = view_cell(center, 0, 0);
    for (const auto &c : state.creatures()) {
        if (!c.alive) {
            continue;
        }
        const int col = c.pos.x - origin.x;
        const int row = c.pos.y - origin.y;
        if (col < 0 || row < 0 || col >= kViewCols || row >= kViewRows) {
            continue;
        }
        const auto sprite = creature_sprite(c, config.plant_ripen_ticks);
        blit_tile(out, atlas.tile(sprite), col * kTileSize, row * kTileSize, false);
    }
    blit_tile(out, atlas.tile(player_sprite(state.player())), (kViewCols / 2) * kTileSize,
              (kViewRows / 2) * kTileSize, false);
}

// Outside the visibility radius: scale toward black, then replace a random
// subset of pixels with black. The number of draws from the view stream is
// fixed per night frame.
void apply_night(WorldState &state, const BalanceConfig &config, Observation &out) {
    const auto scale = static_cast<std::uint32_t>(std::lround(config.night_darkening * 256.0));
    for (int row = 0; row < kViewRows; ++row) {
        for (int col = 0; col < kViewCols; ++col) {
            if (std::max(std::abs(col - kViewCols / 2), std::abs(row - kViewRows / 2)) <=
                config.night_visibility_radius) {
                continue;
            }
            for (int y = 0; y < kTileSize; ++y) {
                auto *dst = out.data() + (row * kTileSize + y) * kStride + col * kTileSize * 3;
                for (int x = 0; x < kTileSize; ++x, dst += 3) {
                    if (state.view_rng.chance(config.night_speckle_probability)) {
                        dst[0] = dst[1] = dst[2] = 0;
                        continue;
                    }
                    for (int c = 0; c < 3; ++c) {
                        dst[c] = static_cast<std::uint8_t>((dst[c] * scale) >> 8);
                    }
                }
            }
        }
    }
}

void draw_hud(const Player &player, const TextureAtlas &atlas, Observation &out) {
    int slot = 0;
    auto put = [&](Sprite icon, int count) {
        const int x0 = (slot % kHudCols) * kTileSize;
        const int y0 = kHudTop + (slot / kHudCols) * kTileSize;
        blit_tile(out, atlas.tile(icon), x0, y0, false);
        draw_digit(out, std::clamp(count, 0, 9), x0 + kDigitX, y0 + kDigitY);
        ++slot;
    };
    for (int v = 0; v < kNumVitals; ++v) {
        put(vital_icon(static_cast<Vital>(v)), player.vitals[static_cast<std::size_t>(v)]);
    }
    for (int i = 0; i < kNumItems; ++i) {
        const int n = player.inventory[static_cast<std::size_t>(i)];
        if (n > 0) {
            put(item_icon(static_cast<Item>(i)), n);
        }
    }
}

void blit_sprite(Image &img, const SpritePixels &sprite, int x0, int y0, bool opaque) noexcept {
    for (int y = 0; y < kSpriteSize; ++y) {
        auto *dst = img.rgb.data() + (static_cast<std::size_t>(y0 + y) * static_cast<std::size_t>(img.width) +
                                      static_cast<std::size_t>(x0)) * 3;
        const auto *src = sprite.data() + y * kSpriteSize * 4;
        for (int x = 0; x < kSpriteSize; ++x, dst += 3, src += 4) {
            if (opaque || src[3] != 0) {
                dst[0] = src[0];
                dst[1] = src[1];
                dst[2] = src[2];
            }
        }
    }
}

auto map_image(const std::array<Material, kNumCells> &cells, const TextureAtlas &atlas) -> Image {
    Image img{kWorldSize * kSpriteSize, kWorldSize * kSpriteSize, {}};
    img.rgb.assign(static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height) * 3, 0);
    for (int y = 0; y < kWorldSize; ++y) {
        for (int x = 0; x < kWorldSize; ++x) {
            const auto m = cells[static_cast<std::size_t>(cell_index({x, y}))];
            blit_sprite(img, atlas.sprite(material_sprite(m)), x * kSpriteSize, y * kSpriteSize, true);
        }
    }
    return img;
}

}    // namespace

void render_observation(WorldState &state, const BalanceConfig &config, const TextureAtlas &atlas, Observation &out) {
    out.fill(0);
    draw_view(state, config, atlas, out);
    if (is_night(state, config)) {
        apply_night(state, config, out);
    }
    draw_hud(state.player(), atlas, out);
}

auto render_observation(WorldState &state, const BalanceConfig &config, const TextureAtlas &atlas) -> Observation {
    Observation out;
    render_observation(state, config, atlas, out);
    return out;
}

auto render_full_map(const WorldGrid &grid, const TextureAtlas &atlas) -> Image {
    return map_image(grid.cells, atlas);
}

auto render_full_map(const WorldState &state, const BalanceConfig &config, const TextureAtlas &atlas) -> Image {
    Image img = map_image(state.grid(), atlas);
    for (const auto &c : state.creatures()) {
        if (c.alive) {
            blit_sprite(img, atlas.sprite(creature_sprite(c, config.plant_ripen_ticks)), c.pos.x * kSpriteSize,
                        c.pos.y * kSpriteSize, false);
        }
    }
    const Pos p = state.player().pos;
    blit_sprite(img, atlas.sprite(player_sprite(state.player())), p.x * kSpriteSize, p.y * kSpriteSize, false);
    return img;
}

}    // namespace craftbench
