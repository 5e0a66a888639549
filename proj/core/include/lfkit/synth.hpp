#pragma once

#include <cstdint>
#include <vector>

#include "lfkit/image.hpp"
#include "lfkit/light_field.hpp"

namespace lfkit {

/// Scalar texture sampled by synth_planar. The origin places light-field
/// coordinate (x=0, y=0) of the center view inside the texture, so shifted
/// reads for off-center views stay in range.
struct Texture {
    int rows = 0;
    int cols = 0;
    int origin_row = 0;
    int origin_col = 0;
    SampleModel model = SampleModel::U16;
    std::vector<float> values;

    float at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
    bool contains(int r, int c) const { return r >= 0 && r < rows && c >= 0 && c < cols; }
};

/// Tight texture size and origin covering every shifted read of
/// synth_planar(U, V, H, W, d): H + |d|*(U-1) by W + |d|*(V-1).
struct TextureExtent {
    int rows = 0;
    int cols = 0;
    int origin_row = 0;
    int origin_col = 0;
};

TextureExtent texture_extent_for(int angular_rows, int angular_cols, int height,
                                 int width, int disparity,
                                 const CenterPolicy& policy = {});

/// Builds a texture just large enough for synth_planar(U, V, H, W, d),
/// evaluating `fn(r, c)` over absolute texture coordinates.
template <typename Fn>
Texture make_texture_for(int angular_rows, int angular_cols, int height,
                         int width, int disparity, Fn&& fn,
                         SampleModel model = SampleModel::U16,
                         const CenterPolicy& policy = {}) {
    const TextureExtent ext = texture_extent_for(angular_rows, angular_cols,
                                                 height, width, disparity, policy);
    Texture tex;
    tex.rows = ext.rows;
    tex.cols = ext.cols;
    tex.origin_row = ext.origin_row;
    tex.origin_col = ext.origin_col;
    tex.model = model;
    tex.values.resize(static_cast<std::size_t>(tex.rows) * tex.cols);
    std::size_t i = 0;
    for (int r = 0; r < tex.rows; ++r)
        for (int c = 0; c < tex.cols; ++c)
            tex.values[i++] = static_cast<float>(fn(r, c));
    return tex;
}

/// Uniform pseudo-random texture over the full sample range, deterministic
/// in the seed.
Texture make_noise_texture(int rows, int cols, std::uint32_t seed,
                           SampleModel model = SampleModel::U16);

/// Diagonal gradient from 0 to full scale.
Texture make_ramp_texture(int rows, int cols, SampleModel model = SampleModel::U16);

/// Synthesizes a constant-depth light field: every view is a crop of the
/// texture shifted by `disparity` pixels per view step away from the center,
///   samples[u,v,x,y] = texture[x + d*(u - cu), y + d*(v - cv)].
/// The center view is the crop at zero offset regardless of d. Reads outside
/// the texture raise OutOfRangeError; there is no wrapping.
LightField4D synth_planar(int angular_rows, int angular_cols, int height,
                          int width, const Texture& texture, int disparity,
                          const CenterPolicy& policy = {}, int channels = 1);

} // namespace lfkit
