#pragma once

#include <filesystem>

#include "lfkit/image.hpp"

namespace lfkit {

/// Reads an 8- or 16-bit grayscale or RGB PNG. Palette images are expanded
/// to RGB; alpha channels are rejected. The returned model is U8 or U16 to
/// match the file's bit depth.
Image read_png(const std::filesystem::path& path);

/// Writes a lossless PNG: U8 images as 8-bit, U16 as 16-bit, Normalized
/// scaled to 16-bit. Only 1- and 3-channel images are supported. Output
/// bytes depend on the pixels alone (no timestamps), so identical images
/// produce identical files.
void write_png(const std::filesystem::path& path, const Image& image);

} // namespace lfkit
