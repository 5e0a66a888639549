#include "lfkit/png_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

#include <png.h>

#include "lfkit/errors.hpp"

namespace lfkit {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void fail(const std::filesystem::path& path, const char* what) {
    throw IoError(path.string() + ": " + what);
}

} // namespace

Image read_png(const std::filesystem::path& path) {
    FilePtr fp(std::fopen(path.string().c_str(), "rb"));
    if (!fp) fail(path, "cannot open for reading");

    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) fail(path, "png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        fail(path, "png_create_info_struct failed");
    }

    std::vector<png_byte> raw;
    std::vector<png_bytep> row_ptrs;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "PNG decode error");
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    int bit_depth = png_get_bit_depth(png, info);
    int color_type = png_get_color_type(png, info);

    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    bit_depth = png_get_bit_depth(png, info);
    color_type = png_get_color_type(png, info);
    const int channels = png_get_channels(png, info);
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "only 1- or 3-channel PNGs without alpha are supported");
    }

    const std::size_t row_bytes = png_get_rowbytes(png, info);
    raw.resize(row_bytes * height);
    row_ptrs.resize(height);
    for (png_uint_32 r = 0; r < height; ++r)
        row_ptrs[r] = raw.data() + r * row_bytes;
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    Image img = Image::zeros(static_cast<int>(height), static_cast<int>(width),
                             channels,
                             bit_depth == 16 ? SampleModel::U16 : SampleModel::U8);
    std::size_t n = img.samples.size();
    if (bit_depth == 16) {
        for (std::size_t i = 0; i < n; ++i) {
            // network byte order in the file
            const unsigned hi = raw[2 * i], lo = raw[2 * i + 1];
            img.samples[i] = static_cast<float>((hi << 8) | lo);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            img.samples[i] = static_cast<float>(raw[i]);
    }
    return img;
}

void write_png(const std::filesystem::path& path, const Image& image) {
    if (image.channels != 1 && image.channels != 3)
        fail(path, "only 1- or 3-channel images can be written");
    if (image.rows < 1 || image.cols < 1) fail(path, "empty image");

    const bool wide = image.model != SampleModel::U8;
    const int bit_depth = wide ? 16 : 8;
    const float scale = sample_scale(image.model);
    const float out_max = wide ? 65535.0f : 255.0f;
    // Normalized samples stretch to the full 16-bit range; integer models
    // pass through.
    const float gain = image.model == SampleModel::Normalized ? out_max / scale : 1.0f;

    const std::size_t n = image.samples.size();
    std::vector<png_byte> raw(n * (wide ? 2 : 1));
    for (std::size_t i = 0; i < n; ++i) {
        const float v = std::clamp(std::round(image.samples[i] * gain), 0.0f, out_max);
        const auto q = static_cast<unsigned>(v);
        if (wide) {
            raw[2 * i] = static_cast<png_byte>(q >> 8);
            raw[2 * i + 1] = static_cast<png_byte>(q & 0xff);
        } else {
            raw[i] = static_cast<png_byte>(q);
        }
    }

    FilePtr fp(std::fopen(path.string().c_str(), "wb"));
    if (!fp) fail(path, "cannot open for writing");

    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) fail(path, "png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        fail(path, "png_create_info_struct failed");
    }

    std::vector<png_bytep> row_ptrs(image.rows);
    const std::size_t row_bytes = raw.size() / image.rows;
    for (int r = 0; r < image.rows; ++r)
        row_ptrs[r] = raw.data() + static_cast<std::size_t>(r) * row_bytes;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail(path, "PNG encode error");
    }

    png_init_io(png, fp.get());
    // Pinned so re-encoding the same pixels is byte-identical.
    png_set_compression_level(png, 6);
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.cols),
                 static_cast<png_uint_32>(image.rows), bit_depth,
                 image.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, row_ptrs.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);

    if (std::fflush(fp.get()) != 0) fail(path, "flush failed");
}

} // namespace lfkit
