#include "craftbench/png.hpp"

#include <png.h>

#include <fstream>

#include "craftbench/error.hpp"

namespace craftbench {

namespace {

void append(png_structp png, png_bytep data, png_size_t size) {
    auto *out = static_cast<std::vector<std::uint8_t> *>(png_get_io_ptr(png));
    out->insert(out->end(), data, data + size);
}

void flush(png_structp) {}

}    // namespace

auto encode_png(const Image &img) -> std::vector<std::uint8_t> {
    if (img.width <= 0 || img.height <= 0 ||
        img.rgb.size() != static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height) * 3) {
        throw CraftError(ErrorCode::invalid_argument, "image buffer does not match its dimensions");
    }
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (info == nullptr) {
        png_destroy_write_struct(&png, nullptr);
        throw CraftError(ErrorCode::io_failure, "png: out of memory");
    }
    std::vector<std::uint8_t> out;
    std::vector<png_bytep> rows(static_cast<std::size_t>(img.height));
    for (int y = 0; y < img.height; ++y) {
        // libpng takes non-const row pointers but does not write through them.
        rows[static_cast<std::size_t>(y)] =
            const_cast<png_bytep>(img.rgb.data() + static_cast<std::size_t>(y) * static_cast<std::size_t>(img.width) * 3);
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw CraftError(ErrorCode::io_failure, "png: encoding failed");
    }
    png_set_write_fn(png, &out, append, flush);
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width), static_cast<png_uint_32>(img.height), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_set_compression_level(png, 6);
    png_set_rows(png, info, rows.data());
    png_write_png(png, info, PNG_TRANSFORM_IDENTITY, nullptr);
    png_destroy_write_struct(&png, &info);
    return out;
}

void write_png(const std::filesystem::path &path, const Image &img) {
    const auto bytes = encode_png(img);
    std::ofstream f(path, std::ios::binary);
    f.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) {
        throw CraftError(ErrorCode::io_failure, "cannot write " + path.string());
    }
}

auto observation_image(const Observation &obs) -> Image {
    return {kObsSize, kObsSize, std::vector<std::uint8_t>(obs.begin(), obs.end())};
}

}    // namespace craftbench
