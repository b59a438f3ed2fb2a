#include "craftbench/atlas.hpp"

#include <string_view>

#include "craftbench/rng.hpp"

namespace craftbench {

namespace {

struct Rgb {
    std::uint8_t r, g, b;
};

using Art = std::array<std::string_view, kSpriteSize>;

consteval auto well_formed(const Art &art) -> bool {
    for (auto row : art) {
        if (row.size() != kSpriteSize) {
            return false;
        }
    }
    return true;
}

// Shared palette. '.' is transparent; '1' and '2' are per-sprite
// substitution slots used by the tool templates.
auto palette(char c) noexcept -> Rgb {
    switch (c) {
        case 'G': return {84, 160, 56};
        case 'g': return {64, 132, 44};
        case 'h': return {108, 182, 72};
        case 'W': return {48, 96, 200};
        case 'w': return {92, 148, 236};
        case 'v': return {36, 72, 164};
        case 'S': return {220, 200, 140};
        case 's': return {196, 174, 112};
        case 'P': return {150, 128, 98};
        case 'p': return {122, 104, 78};
        case 'T': return {128, 128, 128};
        case 't': return {92, 92, 92};
        case 'u': return {164, 164, 164};
        case 'K': return {36, 36, 36};
        case 'I': return {222, 168, 126};
        case 'i': return {180, 122, 90};
        case 'D': return {120, 232, 240};
        case 'd': return {224, 255, 255};
        case 'L': return {230, 78, 22};
        case 'l': return {252, 170, 40};
        case 'B': return {122, 80, 40};
        case 'b': return {84, 54, 26};
        case 'n': return {170, 122, 66};
        case 'F': return {42, 112, 40};
        case 'f': return {26, 82, 28};
        case 'R': return {204, 40, 40};
        case 'r': return {140, 24, 24};
        case 'Y': return {242, 222, 64};
        case 'O': return {234, 140, 40};
        case 'k': return {0, 0, 0};
        case 'X': return {240, 240, 240};
        case 'x': return {196, 196, 196};
        case 'C': return {236, 188, 148};
        case 'E': return {44, 84, 204};
        case 'N': return {30, 30, 80};
        case 'Z': return {98, 170, 90};
        case 'z': return {56, 112, 56};
        case 'M': return {138, 90, 52};
        case 'A': return {240, 164, 172};
        case 'Q': return {226, 226, 210};
        case 'q': return {168, 168, 154};
        default: return {255, 0, 255};
    }
}

constexpr Art kTreeArt = {
    "................",
    ".....FFFFFF.....",
    "...FFFFfFFFFF...",
    "..FFfFFFFFFfFF..",
    "..FFFFFFFfFFFF..",
    ".FFFfFFFFFFFFFF.",
    ".FFFFFFfFFFFfFF.",
    ".FFfFFFFFFFFFFF.",
    "..FFFFFFFFfFFF..",
    "..FFFfFFFFFFFF..",
    "...FFFFFFFFFF...",
    ".....FFBBFF.....",
    ".......BB.......",
    ".......BB.......",
    "......bBBb......",
    "................",
};

constexpr Art kOreArt = {
    "................",
    "................",
    "...11.......2...",
    "..1112.....11...",
    "..111.....1111..",
    "...1......111...",
    "................",
    ".......11.......",
    "......1111......",
    "......2111......",
    ".......11.......",
    "..11.........1..",
    ".1111.......111.",
    ".111.........1..",
    "................",
    "................",
};

constexpr Art kTableArt = {
    "................",
    "................",
    ".nnnnnnnnnnnnnn.",
    ".nBBBBBBBBBBBBn.",
    ".nBnnnnnnnnnnBn.",
    ".nBBBBBBBBBBBBn.",
    ".bbbbbbbbbbbbbb.",
    "..bB........Bb..",
    "..bB........Bb..",
    "..bB........Bb..",
    "..bB........Bb..",
    "..bB........Bb..",
    "..bB........Bb..",
    "..bb........bb..",
    "................",
    "................",
};

constexpr Art kFurnaceArt = {
    "................",
    ".tttttttttttttt.",
    ".tTTTTTTTTTTTTt.",
    ".tTuTTTTTTTTuTt.",
    ".tTTTTTTTTTTTTt.",
    ".tTTkkkkkkkkTTt.",
    ".tTkkkkkkkkkkTt.",
    ".tTkkOOlOOOkkTt.",
    ".tTkOlYlYlOOkTt.",
    ".tTkOOlllOOOkTt.",
    ".tTkkkkkkkkkkTt.",
    ".tTTTTTTTTTTTTt.",
    ".tTuTTTTTTTTuTt.",
    ".tTTTTTTTTTTTTt.",
    ".tttttttttttttt.",
    "................",
};

constexpr Art kSaplingArt = {
    "................",
    "................",
    "................",
    "................",
    ".......F........",
    "......FFF.......",
    ".....FFfFF......",
    ".......F..F.....",
    "...F...F.FF.....",
    "..FFF..F.F......",
    "...FFF.FF.......",
    ".....FFF........",
    ".......F........",
    "......bBb.......",
    ".....bBBBb......",
    "................",
};

constexpr Art kRipePlantArt = {
    "................",
    "................",
    ".....R..........",
    "....RRR..R......",
    ".....R..RRR.....",
    "......FFFR......",
    ".....FFfFF......",
    ".......F..F.....",
    "...F...F.FF.....",
    "..FFF..F.FR.....",
    "..RFFF.FF.RR....",
    "..RR.FFF........",
    ".......F........",
    "......bBb.......",
    ".....bBBBb......",
    "................",
};

constexpr Art kPlayerDownArt = {
    "................",
    ".....bbbbbb.....",
    "....bbbbbbbb....",
    "....bCCCCCCb....",
    "....CkCCCCkC....",
    "....CCCCCCCC....",
    ".....CCrrCC.....",
    "......CCCC......",
    "....EEEEEEEE....",
    "...EEEEEEEEEE...",
    "...CEEEEEEEEC...",
    "...CEEEEEEEEC...",
    ".....NNNNNN.....",
    ".....NN..NN.....",
    ".....NN..NN.....",
    "....kkk..kkk....",
};

constexpr Art kPlayerUpArt = {
    "................",
    ".....bbbbbb.....",
    "....bbbbbbbb....",
    "....bbbbbbbb....",
    "....bbbbbbbb....",
    "....bbbbbbbb....",
    ".....bbbbbb.....",
    "......CCCC......",
    "....EEEEEEEE....",
    "...EEEEEEEEEE...",
    "...CEEEEEEEEC...",
    "...CEEEEEEEEC...",
    ".....NNNNNN.....",
    ".....NN..NN.....",
    ".....NN..NN.....",
    "....kkk..kkk....",
};

constexpr Art kPlayerLeftArt = {
    "................",
    ".....bbbbbb.....",
    "....bbbbbbbb....",
    "....CCCCbbbb....",
    "....kCCCCbbb....",
    "...CCCCCCCbb....",
    "....CrCCCCb.....",
    "......CCCC......",
    ".....EEEEEE.....",
    "....EEEEEEEE....",
    "....CEEEEEEE....",
    "....CEEEEEEE....",
    ".....NNNNNN.....",
    ".....NN.NN......",
    "....NN...NN.....",
    "...kkk...kkk....",
};

constexpr Art kPlayerSleepArt = {
    "...........XXX..",
    ".....bbbbbb..X..",
    "....bbbbbbbbXXX.",
    "....bCCCCCCb....",
    "....CkkCCkkC....",
    "....CCCCCCCC....",
    ".....CCCCCC.....",
    "......CCCC......",
    "....EEEEEEEE....",
    "...EEEEEEEEEE...",
    "...CEEEEEEEEC...",
    "...CEEEEEEEEC...",
    ".....NNNNNN.....",
    ".....NN..NN.....",
    ".....NN..NN.....",
    "....kkk..kkk....",
};

constexpr Art kCowArt = {
    "................",
    "................",
    "..X.........X...",
    "..XMM.....MMX...",
    "...MMM...MMM....",
    "...MkMMMMMkM....",
    "...MMMMMMMMM....",
    "....MAAAAAM.....",
    "....MAkAkAMXXXX.",
    ".MMMMMMXXXMMMMXM",
    ".MXXMMMMMMMMXXMM",
    ".MXXXMMMMMMMMMMM",
    ".MMMMMMMMMMXXMMM",
    "..MM.MM...MM.MM.",
    "..MM.MM...MM.MM.",
    "..kk.kk...kk.kk.",
};

constexpr Art kZombieArt = {
    "................",
    ".....zzzzzz.....",
    "....zZZZZZZz....",
    "....ZRZZZZRZ....",
    "....ZZZZZZZZ....",
    "....ZZkkkkZZ....",
    ".....ZZZZZZ.....",
    "...EEEEEEEEEE...",
    "..ZZEEEEEEEEZZ..",
    "..ZZ.EEEEEE.ZZ..",
    ".....EEEEEE.....",
    ".....NNNNNN.....",
    ".....NN..NN.....",
    ".....NN..NN.....",
    ".....ZZ..ZZ.....",
    "....zzz..zzz....",
};

constexpr Art kSkeletonArt = {
    "................",
    ".....QQQQQQ.....",
    "....QQQQQQQQ....",
    "....QkkQQkkQ....",
    "....QkkQQkkQ....",
    "....QQQQQQQQ....",
    ".....QkQkQQ.....",
    "......QQQQ......",
    "....q.QQQQ.q....",
    "...QQQQQQQQQQ...",
    "...Q..QQQQ..Q...",
    "...Q.QQQQQQ.Q...",
    "......QQQQ......",
    ".....QQ..QQ.....",
    ".....QQ..QQ.....",
    "....qqq..qqq....",
};

constexpr Art kArrowEastArt = {
    "................",
    "................",
    "................",
    "................",
    "................",
    "................",
    ".X.X.........k..",
    "..XXBBBBBBBBBkk.",
    "..XXBBBBBBBBBkk.",
    ".X.X.........k..",
    "................",
    "................",
    "................",
    "................",
    "................",
    "................",
};

constexpr Art kHeartArt = {
    "................",
    "................",
    "...RRR....RRR...",
    "..RRRRR..RRRRR..",
    ".RRXRRRRRRRRRRR.",
    ".RXRRRRRRRRRRRR.",
    ".RRRRRRRRRRRRRR.",
    ".RRRRRRRRRRRRRR.",
    "..RRRRRRRRRRRR..",
    "...RRRRRRRRRR...",
    "....RRRRRRRR....",
    ".....RRRRRR.....",
    "......RRRR......",
    ".......RR.......",
    "................",
    "................",
};

constexpr Art kFoodArt = {
    "................",
    "................",
    "........MMMM....",
    ".......MMMMMM...",
    "......MMOMMMMM..",
    "......MOMMMMMM..",
    "......MMMMMMMM..",
    ".......MMMMMM...",
    "......XMMMMM....",
    ".....XX.MMM.....",
    "....XX..........",
    "...XX...........",
    ".XXXX...........",
    ".XXX............",
    "..X.............",
    "................",
};

constexpr Art kDropArt = {
    "................",
    ".......W........",
    ".......W........",
    "......WWW.......",
    "......WWW.......",
    ".....WWWWW......",
    ".....WwWWW......",
    "....WWwWWWW.....",
    "....WwWWWWW.....",
    "...WWwWWWWWW....",
    "...WWWWWWWWW....",
    "...WWWWWWWWW....",
    "....WWWWWWW.....",
    ".....WWWWW......",
    "................",
    "................",
};

constexpr Art kBoltArt = {
    "................",
    ".........YY.....",
    "........YY......",
    ".......YY.......",
    "......YY........",
    ".....YYY........",
    "....YYYYYYY.....",
    ".......YYY......",
    "......YYY.......",
    ".....YYY........",
    ".....YY.........",
    "....YY..........",
    "...YY...........",
    "...Y............",
    "................",
    "................",
};

constexpr Art kLogArt = {
    "................",
    "................",
    "................",
    "................",
    "....bbbbbbbbb...",
    "...bBBBBBBBBnb..",
    "..bBBBBBBBBnnnb.",
    "..bBBBBBBBBnbnb.",
    "..bBBBBBBBBnnnb.",
    "..bBBBBBBBBBnb..",
    "...bbbbbbbbbb...",
    "................",
    "................",
    "................",
    "................",
    "................",
};

constexpr Art kRockArt = {
    "................",
    "................",
    "................",
    "................",
    "......tttt......",
    "....ttTTTTtt....",
    "...tTTuTTTTTt...",
    "..tTTuuTTTTTTt..",
    "..tTTTTTTTtTTt..",
    "..tTTTTTTTTTTt..",
    "...tTTTTTTTTt...",
    "....tttttttt....",
    "................",
    "................",
    "................",
    "................",
};

constexpr Art kLumpArt = {
    "................",
    "................",
    "................",
    "................",
    ".....kkkkk......",
    "....kKKKKKkk....",
    "...kKKxKKKKKk...",
    "..kKKKKKKKKKKk..",
    "..kKKKKKKxKKKk..",
    "..kKKKKKKKKKKk..",
    "...kKKKKKKKKk...",
    "....kkkkkkkk....",
    "................",
    "................",
    "................",
    "................",
};

constexpr Art kIngotArt = {
    "................",
    "................",
    "................",
    "................",
    "................",
    ".....IIIIIIII...",
    "....IdIIIIIIi...",
    "...IIIIIIIIii...",
    "..iiiiiiiiiii...",
    "..iIIIIIIIIii...",
    "..iIIIIIIIIi....",
    "..iiiiiiiiii....",
    "................",
    "................",
    "................",
    "................",
};

constexpr Art kGemArt = {
    "................",
    "................",
    "................",
    "....DDDDDDDD....",
    "...DdDDdDDdDD...",
    "..DDDDDDDDDDDD..",
    "..dDDDDDDDDDDd..",
    "...DDDDDDDDDD...",
    "....DDDDDDDD....",
    ".....DDDDDD.....",
    "......DDDD......",
    ".......DD.......",
    "................",
    "................",
    "................",
    "................",
};

constexpr Art kPickaxeArt = {
    "................",
    "...1111111111...",
    "..122222222221..",
    "..12...BB...21..",
    "..1....BB....1..",
    ".......BB.......",
    ".......BB.......",
    ".......BB.......",
    ".......BB.......",
    ".......BB.......",
    ".......BB.......",
    ".......BB.......",
    ".......BB.......",
    ".......bb.......",
    "................",
    "................",
};

constexpr Art kSwordArt = {
    "................",
    ".............11.",
    "............121.",
    "...........121..",
    "..........121...",
    ".........121....",
    "........121.....",
    ".......121......",
    "..b...121.......",
    "...b.121........",
    "....bB1.........",
    "....Bbb.........",
    "...BB..b........",
    "..BB............",
    ".bB.............",
    "................",
};

static_assert(well_formed(kTreeArt) && well_formed(kOreArt) && well_formed(kTableArt) && well_formed(kFurnaceArt));
static_assert(well_formed(kSaplingArt) && well_formed(kRipePlantArt) && well_formed(kPlayerDownArt));
static_assert(well_formed(kPlayerUpArt) && well_formed(kPlayerLeftArt) && well_formed(kPlayerSleepArt));
static_assert(well_formed(kCowArt) && well_formed(kZombieArt) && well_formed(kSkeletonArt));
static_assert(well_formed(kArrowEastArt) && well_formed(kHeartArt) && well_formed(kFoodArt) && well_formed(kDropArt));
static_assert(well_formed(kBoltArt) && well_formed(kLogArt) && well_formed(kRockArt) && well_formed(kLumpArt));
static_assert(well_formed(kIngotArt) && well_formed(kGemArt) && well_formed(kPickaxeArt) && well_formed(kSwordArt));

// Digits 0-9 as 3x5 bitmaps, rows top to bottom, 'X' is ink.
constexpr std::array<std::array<std::string_view, 5>, 10> kDigitArt = {{
    {"XXX", "X.X", "X.X", "X.X", "XXX"},
    {".X.", "XX.", ".X.", ".X.", "XXX"},
    {"XXX", "..X", "XXX", "X..", "XXX"},
    {"XXX", "..X", "XXX", "..X", "XXX"},
    {"X.X", "X.X", "XXX", "..X", "..X"},
    {"XXX", "X..", "XXX", "..X", "XXX"},
    {"XXX", "X..", "XXX", "X.X", "XXX"},
    {"XXX", "..X", ".X.", ".X.", ".X."},
    {"XXX", "X.X", "XXX", "X.X", "XXX"},
    {"XXX", "X.X", "XXX", "..X", "XXX"},
}};

struct Slots {
    Rgb one{255, 0, 255};
    Rgb two{255, 0, 255};
};

void paint(SpritePixels &out, const Art &art, Slots slots = {}) {
    for (int y = 0; y < kSpriteSize; ++y) {
        for (int x = 0; x < kSpriteSize; ++x) {
            const char c = art[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
            if (c == '.') {
                continue;
            }
            const Rgb rgb = c == '1' ? slots.one : c == '2' ? slots.two : palette(c);
            const auto i = static_cast<std::size_t>((y * kSpriteSize + x) * 4);
            out[i] = rgb.r;
            out[i + 1] = rgb.g;
            out[i + 2] = rgb.b;
            out[i + 3] = 255;
        }
    }
}

// Opaque base texture: `base` speckled with `dark` and `light` from a
// seeded hash, so the result is fixed by the arguments alone.
auto speckle(Rgb base, Rgb dark, Rgb light, std::uint64_t seed, int dark_pct, int light_pct) -> SpritePixels {
    SpritePixels out{};
    for (int i = 0; i < kSpriteSize * kSpriteSize; ++i) {
        const auto roll = static_cast<int>(mix64(seed * 0x100 + static_cast<std::uint64_t>(i)) % 100);
        const Rgb c = roll < dark_pct ? dark : roll < dark_pct + light_pct ? light : base;
        const auto k = static_cast<std::size_t>(i * 4);
        out[k] = c.r;
        out[k + 1] = c.g;
        out[k + 2] = c.b;
        out[k + 3] = 255;
    }
    return out;
}

auto water_texture() -> SpritePixels {
    SpritePixels out = speckle(palette('W'), palette('v'), palette('W'), 11, 10, 0);
    // Short horizontal wave crests.
    for (int y = 2; y < kSpriteSize; y += 5) {
        const int shift = (y * 7) % kSpriteSize;
        for (int k = 0; k < 4; ++k) {
            const int x = (shift + k) % kSpriteSize;
            const auto i = static_cast<std::size_t>((y * kSpriteSize + x) * 4);
            const Rgb c = palette('w');
            out[i] = c.r;
            out[i + 1] = c.g;
            out[i + 2] = c.b;
        }
    }
    return out;
}

auto over(SpritePixels base, const Art &art, Slots slots = {}) -> SpritePixels {
    paint(base, art, slots);
    return base;
}

auto from_art(const Art &art, Slots slots = {}) -> SpritePixels {
    SpritePixels out{};
    paint(out, art, slots);
    return out;
}

auto mirrored(const SpritePixels &in) -> SpritePixels {
    SpritePixels out{};
    for (int y = 0; y < kSpriteSize; ++y) {
        for (int x = 0; x < kSpriteSize; ++x) {
            for (int c = 0; c < 4; ++c) {
                out[static_cast<std::size_t>((y * kSpriteSize + x) * 4 + c)] =
                    in[static_cast<std::size_t>((y * kSpriteSize + (kSpriteSize - 1 - x)) * 4 + c)];
            }
        }
    }
    return out;
}

// Rotates 90 degrees counter-clockwise.
auto rotated_ccw(const SpritePixels &in) -> SpritePixels {
    SpritePixels out{};
    for (int y = 0; y < kSpriteSize; ++y) {
        for (int x = 0; x < kSpriteSize; ++x) {
            const int sx = kSpriteSize - 1 - y;
            const int sy = x;
            for (int c = 0; c < 4; ++c) {
                out[static_cast<std::size_t>((y * kSpriteSize + x) * 4 + c)] =
                    in[static_cast<std::size_t>((sy * kSpriteSize + sx) * 4 + c)];
            }
        }
    }
    return out;
}

auto digit_sprite(int d) -> SpritePixels {
    SpritePixels out{};
    const auto &glyph = kDigitArt[static_cast<std::size_t>(d)];
    // 3x5 glyph scaled by 3 into a 9x15 box at (4, 0).
    for (int y = 0; y < 15; ++y) {
        for (int x = 0; x < 9; ++x) {
            if (glyph[static_cast<std::size_t>(y / 3)][static_cast<std::size_t>(x / 3)] != 'X') {
                continue;
            }
            const auto i = static_cast<std::size_t>((y * kSpriteSize + x + 4) * 4);
            out[i] = out[i + 1] = out[i + 2] = 255;
            out[i + 3] = 255;
        }
    }
    return out;
}

// Box filter 16 -> 7. Source pixel i spans [7i, 7i + 7) and target pixel o
// spans [16o, 16o + 16) in a common 112-unit grid; weights are the integer
// overlap areas, so results are exact. A target pixel is opaque when at
// least half of its area is covered by opaque source pixels.
auto downsample(const SpritePixels &in) -> TilePixels {
    TilePixels out{};
    auto overlap = [](int src, int dst) {
        const int lo = std::max(src * kTileSize, dst * kSpriteSize);
        const int hi = std::min(src * kTileSize + kTileSize, dst * kSpriteSize + kSpriteSize);
        return std::max(0, hi - lo);
    };
    for (int oy = 0; oy < kTileSize; ++oy) {
        for (int ox = 0; ox < kTileSize; ++ox) {
            std::array<std::uint32_t, 3> sum{};
            std::uint32_t covered = 0;
            for (int sy = 0; sy < kSpriteSize; ++sy) {
                const int wy = overlap(sy, oy);
                if (wy == 0) {
                    continue;
                }
                for (int sx = 0; sx < kSpriteSize; ++sx) {
                    const int wx = overlap(sx, ox);
                    if (wx == 0) {
                        continue;
                    }
                    const auto i = static_cast<std::size_t>((sy * kSpriteSize + sx) * 4);
                    if (in[i + 3] == 0) {
                        continue;
                    }
                    const auto w = static_cast<std::uint32_t>(wx * wy);
                    covered += w;
                    for (std::size_t c = 0; c < 3; ++c) {
                        sum[c] += w * in[i + c];
                    }
                }
            }
            const auto o = static_cast<std::size_t>((oy * kTileSize + ox) * 4);
            constexpr std::uint32_t kArea = kSpriteSize * kSpriteSize;
            if (covered * 2 >= kArea) {
                for (std::size_t c = 0; c < 3; ++c) {
                    out[o + c] = static_cast<std::uint8_t>((sum[c] + covered / 2) / covered);
                }
                out[o + 3] = 255;
            }
        }
    }
    return out;
}

}    // namespace

TextureAtlas::TextureAtlas() {
    const auto grass = speckle(palette('G'), palette('g'), palette('h'), 1, 12, 10);
    const auto sand = speckle(palette('S'), palette('s'), palette('S'), 2, 14, 0);
    const auto path = speckle(palette('P'), palette('p'), palette('P'), 3, 18, 0);
    const auto stone = speckle(palette('T'), palette('t'), palette('u'), 4, 16, 10);
    const auto lava = speckle(palette('L'), palette('L'), palette('l'), 5, 0, 25);

    auto set = [&](Sprite s, const SpritePixels &px) { sprites_[static_cast<std::size_t>(s)] = px; };

    set(Sprite::water, water_texture());
    set(Sprite::sand, sand);
    set(Sprite::grass, grass);
    set(Sprite::tree, over(grass, kTreeArt));
    set(Sprite::path, path);
    set(Sprite::stone, stone);
    set(Sprite::coal, over(stone, kOreArt, {palette('K'), palette('t')}));
    set(Sprite::iron, over(stone, kOreArt, {palette('I'), palette('i')}));
    set(Sprite::diamond, over(stone, kOreArt, {palette('D'), palette('d')}));
    set(Sprite::lava, lava);
    set(Sprite::table, over(path, kTableArt));
    set(Sprite::furnace, over(path, kFurnaceArt));
    set(Sprite::plant, over(grass, kSaplingArt));
    set(Sprite::plant_ripe, over(grass, kRipePlantArt));

    set(Sprite::player_down, from_art(kPlayerDownArt));
    set(Sprite::player_up, from_art(kPlayerUpArt));
    set(Sprite::player_left, from_art(kPlayerLeftArt));
    set(Sprite::player_right, mirrored(from_art(kPlayerLeftArt)));
    set(Sprite::player_sleep, from_art(kPlayerSleepArt));
    set(Sprite::cow, from_art(kCowArt));
    set(Sprite::zombie, from_art(kZombieArt));
    set(Sprite::skeleton, from_art(kSkeletonArt));

    const auto arrow_east = from_art(kArrowEastArt);
    const auto arrow_north = rotated_ccw(arrow_east);
    const auto arrow_west = rotated_ccw(arrow_north);
    set(Sprite::arrow_east, arrow_east);
    set(Sprite::arrow_north, arrow_north);
    set(Sprite::arrow_west, arrow_west);
    set(Sprite::arrow_south, rotated_ccw(arrow_west));

    set(Sprite::icon_health, from_art(kHeartArt));
    set(Sprite::icon_food, from_art(kFoodArt));
    set(Sprite::icon_drink, from_art(kDropArt));
    set(Sprite::icon_energy, from_art(kBoltArt));
    set(Sprite::icon_sapling, from_art(kSaplingArt));
    set(Sprite::icon_wood, from_art(kLogArt));
    set(Sprite::icon_stone, from_art(kRockArt));
    set(Sprite::icon_coal, from_art(kLumpArt));
    set(Sprite::icon_iron, from_art(kIngotArt));
    set(Sprite::icon_diamond, from_art(kGemArt));
    set(Sprite::icon_wood_pickaxe, from_art(kPickaxeArt, {palette('n'), palette('B')}));
    set(Sprite::icon_stone_pickaxe, from_art(kPickaxeArt, {palette('t'), palette('u')}));
    set(Sprite::icon_iron_pickaxe, from_art(kPickaxeArt, {palette('x'), palette('X')}));
    set(Sprite::icon_wood_sword, from_art(kSwordArt, {palette('n'), palette('B')}));
    set(Sprite::icon_stone_sword, from_art(kSwordArt, {palette('t'), palette('u')}));
    set(Sprite::icon_iron_sword, from_art(kSwordArt, {palette('x'), palette('X')}));
    for (int d = 0; d < 10; ++d) {
        set(static_cast<Sprite>(static_cast<int>(Sprite::digit_0) + d), digit_sprite(d));
    }

    for (std::size_t i = 0; i < sprites_.size(); ++i) {
        tiles_[i] = downsample(sprites_[i]);
    }
}

auto TextureAtlas::builtin() -> const TextureAtlas & {
    static const TextureAtlas atlas;
    return atlas;
}

auto TextureAtlas::digit_glyph(int digit) noexcept -> Glyph {
    Glyph g = 0;
    const auto &art = kDigitArt[static_cast<std::size_t>(digit)];
    for (int y = 0; y < 5; ++y) {
        for (int x = 0; x < 3; ++x) {
            if (art[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] == 'X') {
                g = static_cast<Glyph>(g | (1U << static_cast<unsigned>(y * 3 + x)));
            }
        }
    }
    return g;
}

auto TextureAtlas::content_hash() const noexcept -> std::uint64_t {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto &s : sprites_) {
        for (auto b : s) {
            h ^= b;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

auto item_icon(Item item) noexcept -> Sprite {
    return static_cast<Sprite>(static_cast<int>(Sprite::icon_sapling) + static_cast<int>(item));
}

auto vital_icon(Vital v) noexcept -> Sprite {
    return static_cast<Sprite>(static_cast<int>(Sprite::icon_health) + static_cast<int>(v));
}

auto creature_sprite(const Creature &c, int ripen_ticks) noexcept -> Sprite {
    switch (c.kind) {
        case CreatureKind::cow:
            return Sprite::cow;
        case CreatureKind::zombie:
            return Sprite::zombie;
        case CreatureKind::skeleton:
            return Sprite::skeleton;
        case CreatureKind::plant:
            return c.timer >= ripen_ticks ? Sprite::plant_ripe : Sprite::plant;
        case CreatureKind::arrow:
            switch (c.facing) {
                case Direction::north:
                    return Sprite::arrow_north;
                case Direction::south:
                    return Sprite::arrow_south;
                case Direction::east:
                    return Sprite::arrow_east;
                case Direction::west:
                    return Sprite::arrow_west;
            }
    }
    return Sprite::cow;
}

auto player_sprite(const Player &p) noexcept -> Sprite {
    if (p.sleeping) {
        return Sprite::player_sleep;
    }
    switch (p.facing) {
        case Direction::north:
            return Sprite::player_up;
        case Direction::south:
            return Sprite::player_down;
        case Direction::east:
            return Sprite::player_right;
        case Direction::west:
            return Sprite::player_left;
    }
    return Sprite::player_down;
}

}    // namespace craftbench
