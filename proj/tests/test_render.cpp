#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "craftbench/env.hpp"
#include "craftbench/png.hpp"
#include "craftbench/render.hpp"
#include "craftbench/sim.hpp"
#include "craftbench/worldgen.hpp"

using namespace craftbench;

namespace {

const BalanceConfig kCfg{};
constexpr Pos kHome{20, 20};

auto atlas() -> const TextureAtlas & {
    return TextureAtlas::builtin();
}

auto grass_world() -> WorldState {
    auto s = WorldState::uniform(Material::grass, kHome, 5);
    s.set_day_tick(kCfg.day_length / 4);
    return s;
}

auto pixel(const Observation &o, int x, int y) -> const std::uint8_t * {
    return o.data() + (y * kObsSize + x) * 3;
}

// Bounding box of differing pixels; empty when the images match.
struct Box {
    int x0 = kObsSize;
    int y0 = kObsSize;
    int x1 = -1;
    int y1 = -1;

    auto empty() const -> bool { return x1 < 0; }
};

auto diff_box(const Observation &a, const Observation &b) -> Box {
    Box box;
    for (int y = 0; y < kObsSize; ++y) {
        for (int x = 0; x < kObsSize; ++x) {
            if (!std::equal(pixel(a, x, y), pixel(a, x, y) + 3, pixel(b, x, y))) {
                box.x0 = std::min(box.x0, x);
                box.y0 = std::min(box.y0, y);
                box.x1 = std::max(box.x1, x);
                box.y1 = std::max(box.y1, y);
            }
        }
    }
    return box;
}

auto read_bytes(const std::filesystem::path &p) -> std::vector<std::uint8_t> {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}    // namespace

TEST(Render, AtlasHashIsFrozen) {
    // Recomputed here over the public sprite accessors as a second route.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int s = 0; s < kNumSprites; ++s) {
        for (auto b : atlas().sprite(static_cast<Sprite>(s))) {
            h ^= b;
            h *= 0x100000001b3ULL;
        }
    }
    EXPECT_EQ(h, atlas().content_hash());
    EXPECT_EQ(atlas().content_hash(), 0x1bf32a0de60bc19dULL);
}

TEST(Render, SpritesAreDistinctAndTilesHaveBinaryAlpha) {
    for (int a = 0; a < kNumSprites; ++a) {
        for (int b = a + 1; b < kNumSprites; ++b) {
            EXPECT_NE(atlas().sprite(static_cast<Sprite>(a)), atlas().sprite(static_cast<Sprite>(b))) << a << " " << b;
        }
        const auto &t = atlas().tile(static_cast<Sprite>(a));
        for (std::size_t i = 3; i < t.size(); i += 4) {
            ASSERT_TRUE(t[i] == 0 || t[i] == 255);
        }
    }
    // Terrain is opaque.
    for (int m = 0; m < kNumMaterials; ++m) {
        const auto &t = atlas().tile(material_sprite(static_cast<Material>(m)));
        for (std::size_t i = 3; i < t.size(); i += 4) {
            ASSERT_EQ(t[i], 255);
        }
    }
}

TEST(Render, SameStateSameFrame) {
    auto a = grass_world();
    auto b = grass_world();
    EXPECT_EQ(render_observation(a, kCfg, atlas()), render_observation(b, kCfg, atlas()));

    // Night frames draw from the view stream, identically for equal states.
    a.set_day_tick(kCfg.day_length - 1);
    b.set_day_tick(kCfg.day_length - 1);
    EXPECT_EQ(render_observation(a, kCfg, atlas()), render_observation(b, kCfg, atlas()));
    EXPECT_EQ(a.view_rng, b.view_rng);
}

TEST(Render, DayFrameLeavesStateUntouched) {
    auto s = grass_world();
    const auto before = s;
    render_observation(s, kCfg, atlas());
    EXPECT_EQ(s, before);
}

TEST(Render, GrassWorldAtNoonIsMostlyGrass) {
    auto s = grass_world();
    const auto obs = render_observation(s, kCfg, atlas());
    const auto &tile = atlas().tile(Sprite::grass);
    int grass = 0;
    for (int y = 0; y < kObsSize; ++y) {
        for (int x = 0; x < kObsSize; ++x) {
            if (x >= kViewWidth || y >= kViewHeight) {
                continue;
            }
            const auto *t = tile.data() + ((y % kTileSize) * kTileSize + (x % kTileSize)) * 4;
            grass += std::equal(t, t + 3, pixel(obs, x, y)) ? 1 : 0;
        }
    }
    EXPECT_GE(grass, kObsSize * kObsSize / 2);
    // Every view tile but the player's is pure grass.
    EXPECT_GE(grass, (kViewCols * kViewRows - 1) * kTileSize * kTileSize);
}

TEST(Render, BorderRowAndColumnStayBlack) {
    auto s = grass_world();
    s.player().count(Item::wood) = 4;
    const auto obs = render_observation(s, kCfg, atlas());
    for (int i = 0; i < kObsSize; ++i) {
        for (int c = 0; c < 3; ++c) {
            EXPECT_EQ(pixel(obs, kObsSize - 1, i)[c], 0);
            EXPECT_EQ(pixel(obs, i, kObsSize - 1)[c], 0);
        }
    }
}

TEST(Render, HealthOnlyChangesItsHudSlot) {
    auto a = grass_world();
    auto b = grass_world();
    b.player().vital(Vital::health) = 3;
    const auto box = diff_box(render_observation(a, kCfg, atlas()), render_observation(b, kCfg, atlas()));
    ASSERT_FALSE(box.empty());
    EXPECT_GE(box.x0, 0);
    EXPECT_LT(box.x1, kTileSize);
    EXPECT_GE(box.y0, kHudTop);
    EXPECT_LT(box.y1, kHudTop + kTileSize);
}

TEST(Render, InventoryCountsCapAtNineOnScreen) {
    auto a = grass_world();
    auto b = grass_world();
    a.player().count(Item::stone) = 9;
    b.player().count(Item::stone) = 40;
    EXPECT_EQ(render_observation(a, kCfg, atlas()), render_observation(b, kCfg, atlas()));
}

TEST(Render, OnlyCellsInsideTheWindowMatter) {
    auto base = grass_world();
    const auto reference = render_observation(base, kCfg, atlas());
    for (int dy = -6; dy <= 6; ++dy) {
        for (int dx = -7; dx <= 7; ++dx) {
            auto s = grass_world();
            const Pos p{kHome.x + dx, kHome.y + dy};
            s.set_material(p, Material::stone);
            const auto box = diff_box(reference, render_observation(s, kCfg, atlas()));
            const bool inside = dx >= -kViewCols / 2 && dx <= kViewCols / 2 && dy >= -kViewRows / 2 &&
                                dy <= kViewRows / 2;
            if (!inside) {
                EXPECT_TRUE(box.empty()) << dx << "," << dy;
                continue;
            }
            // Drawn into exactly its own tile.
            ASSERT_FALSE(box.empty()) << dx << "," << dy;
            const int col = dx + kViewCols / 2;
            const int row = dy + kViewRows / 2;
            EXPECT_GE(box.x0, col * kTileSize);
            EXPECT_LT(box.x1, (col + 1) * kTileSize);
            EXPECT_GE(box.y0, row * kTileSize);
            EXPECT_LT(box.y1, (row + 1) * kTileSize);
        }
    }
}

TEST(Render, CreaturesAppearInTheirTile) {
    auto a = grass_world();
    auto b = grass_world();
    b.add_creature({CreatureKind::zombie, {kHome.x + 2, kHome.y - 1}, kCfg.zombie_health, 0});
    const auto box = diff_box(render_observation(a, kCfg, atlas()), render_observation(b, kCfg, atlas()));
    ASSERT_FALSE(box.empty());
    EXPECT_GE(box.x0, 6 * kTileSize);
    EXPECT_LT(box.x1, 7 * kTileSize);
    EXPECT_GE(box.y0, 2 * kTileSize);
    EXPECT_LT(box.y1, 3 * kTileSize);
}

TEST(Render, NightDarkensTheEdges) {
    auto day = grass_world();
    auto night = grass_world();
    night.set_day_tick(kCfg.day_length - 1);
    const auto d = render_observation(day, kCfg, atlas());
    const auto n = render_observation(night, kCfg, atlas());
    long day_sum = 0;
    long night_sum = 0;
    for (int y = 0; y < kTileSize; ++y) {
        for (int x = 0; x < kTileSize; ++x) {
            for (int c = 0; c < 3; ++c) {
                day_sum += pixel(d, x, y)[c];
                night_sum += pixel(n, x, y)[c];
            }
        }
    }
    EXPECT_LT(night_sum, day_sum);
    // The player's surroundings stay lit.
    const int cx = (kViewCols / 2) * kTileSize;
    const int cy = (kViewRows / 2) * kTileSize;
    for (int y = cy - kTileSize; y < cy + 2 * kTileSize; ++y) {
        for (int x = cx - kTileSize; x < cx + 2 * kTileSize; ++x) {
            ASSERT_TRUE(std::equal(pixel(d, x, y), pixel(d, x, y) + 3, pixel(n, x, y)));
        }
    }
}

TEST(Render, NearTheBorderOutsideCellsAreBlack) {
    auto s = WorldState::uniform(Material::grass, {1, 1}, 5);
    const auto obs = render_observation(s, kCfg, atlas());
    // View column 0..2 and row 0..1 lie outside the map.
    for (int y = 0; y < 2 * kTileSize; ++y) {
        for (int x = 0; x < kViewWidth; ++x) {
            for (int c = 0; c < 3; ++c) {
                ASSERT_EQ(pixel(obs, x, y)[c], 0);
            }
        }
    }
}

TEST(Render, FullMapOfWaterIsTiledWaterSprite) {
    WorldGrid grid;
    grid.cells.fill(Material::water);
    const auto img = render_full_map(grid, atlas());
    ASSERT_EQ(img.width, kWorldSize * kSpriteSize);
    ASSERT_EQ(img.height, kWorldSize * kSpriteSize);
    ASSERT_EQ(img.rgb.size(), static_cast<std::size_t>(img.width * img.height * 3));
    const auto &sprite = atlas().sprite(Sprite::water);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const auto *px = img.rgb.data() + (static_cast<std::size_t>(y) * img.width + x) * 3;
            const auto *sp = sprite.data() + ((y % kSpriteSize) * kSpriteSize + x % kSpriteSize) * 4;
            ASSERT_TRUE(std::equal(sp, sp + 3, px)) << x << "," << y;
        }
    }
}

TEST(Render, PngIsDeterministicAcrossProcesses) {
    const auto dir = std::filesystem::temp_directory_path() / "craftbench_render_test";
    std::filesystem::create_directories(dir);
    const auto a = dir / "a.png";
    const auto b = dir / "b.png";
    const std::string cli = CRAFTBENCH_CLI;
    ASSERT_EQ(std::system((cli + " gen --seed 3 --out " + a.string() + " > /dev/null").c_str()), 0);
    ASSERT_EQ(std::system((cli + " gen --seed 3 --out " + b.string() + " > /dev/null").c_str()), 0);
    const auto bytes_a = read_bytes(a);
    EXPECT_EQ(bytes_a, read_bytes(b));
    const auto world = generate_world(derive_episode_seed(3, 0), kCfg);
    EXPECT_EQ(bytes_a, encode_png(render_full_map(world.grid, atlas())));
    ASSERT_GE(bytes_a.size(), 8u);
    EXPECT_EQ(bytes_a[1], 'P');
    std::filesystem::remove_all(dir);
}

TEST(Render, ObservationShapeAndRangeUnderFuzz) {
    Env env(kCfg, EnvOptions{.render_observations = true, .semantic_info = false});
    Rng rng(8);
    std::uint64_t episode = 0;
    env.reset(11, episode);
    for (int t = 0; t < 100000; ++t) {
        if (env.done()) {
            env.reset(11, ++episode);
        }
        const auto &obs = env.step(static_cast<int>(rng.below(kNumActions))).observation;
        static_assert(std::tuple_size_v<std::decay_t<decltype(obs)>> == 64 * 64 * 3);
        // Uint8 range is a type property; the HUD must always show health.
        const auto *health_icon = atlas().tile(Sprite::icon_health).data();
        bool icon_ink = false;
        for (int y = 0; y < kTileSize && !icon_ink; ++y) {
            for (int x = 0; x < kTileSize; ++x) {
                const auto *src = health_icon + (y * kTileSize + x) * 4;
                if (src[3] != 0 && std::equal(src, src + 3, pixel(obs, x, kHudTop + y))) {
                    icon_ink = true;
                    break;
                }
            }
        }
        ASSERT_TRUE(icon_ink) << "step " << t;
        ASSERT_EQ(pixel(obs, 63, 63)[0], 0);
    }
}
