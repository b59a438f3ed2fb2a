#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "craftbench/atlas.hpp"
#include "craftbench/config.hpp"
#include "craftbench/world.hpp"
#include "craftbench/worldgen.hpp"

namespace craftbench {

inline constexpr int kObsSize = 64;
inline constexpr int kObsBytes = kObsSize * kObsSize * 3;

// Observation layout. The local view is 9x7 cells of 7x7 px in the top-left
// 63x49 pixels, with the player in cell (4, 3). The HUD is two rows of nine
// 7x7 slots at rows 49..62. Column 63 and row 63 stay black.
inline constexpr int kViewCols = 9;
inline constexpr int kViewRows = 7;
inline constexpr int kViewWidth = kViewCols * kTileSize;
inline constexpr int kViewHeight = kViewRows * kTileSize;
inline constexpr int kHudTop = kViewHeight;
inline constexpr int kHudCols = 9;
inline constexpr int kHudRows = 2;
// Top-left corner of the count digit inside a HUD slot.
inline constexpr int kDigitX = 4;
inline constexpr int kDigitY = 2;

// Row-major RGB, 64x64x3.
using Observation = std::array<std::uint8_t, kObsBytes>;

struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;

    auto operator==(const Image &) const noexcept -> bool = default;
};

// Renders the agent's observation. At night, draws the speckle pattern from
// state.view_rng, so the stream advances; otherwise the state is untouched.
void render_observation(WorldState &state, const BalanceConfig &config, const TextureAtlas &atlas, Observation &out);
auto render_observation(WorldState &state, const BalanceConfig &config, const TextureAtlas &atlas) -> Observation;

// World cell shown in view slot (col, row).
constexpr auto view_cell(Pos player, int col, int row) noexcept -> Pos {
    return {player.x - kViewCols / 2 + col, player.y - kViewRows / 2 + row};
}

// 1024x1024 debug render, one 16x16 sprite per cell.
auto render_full_map(const WorldGrid &grid, const TextureAtlas &atlas) -> Image;
// Same, with creatures and the player drawn on top.
auto render_full_map(const WorldState &state, const BalanceConfig &config, const TextureAtlas &atlas) -> Image;

}    // namespace craftbench
