#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "craftbench/render.hpp"

namespace craftbench {

// 8-bit RGB, non-interlaced, fixed compression settings, no timestamp or
// text chunks. Equal images always encode to equal bytes.
auto encode_png(const Image &img) -> std::vector<std::uint8_t>;

// Throws CraftError(io_failure).
void write_png(const std::filesystem::path &path, const Image &img);

// Wraps a 64x64 observation as an image.
auto observation_image(const Observation &obs) -> Image;

}    // namespace craftbench
