#include "lfkit/synth.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <utility>

namespace lfkit {

TextureExtent texture_extent_for(int angular_rows, int angular_cols, int height,
                                 int width, int disparity,
                                 const CenterPolicy& policy) {
    const int cu = policy.center_row(angular_rows);
    const int cv = policy.center_col(angular_cols);
    const auto span = [disparity](int extent, int center) {
        const int a = disparity * (0 - center);
        const int b = disparity * (extent - 1 - center);
        return std::pair<int, int>{a < b ? a : b, a < b ? b : a};
    };
    const auto [rlo, rhi] = span(angular_rows, cu);
    const auto [clo, chi] = span(angular_cols, cv);
    return {height + (rhi - rlo), width + (chi - clo), -rlo, -clo};
}

Texture make_noise_texture(int rows, int cols, std::uint32_t seed,
                           SampleModel model) {
    // Raw engine output modulo the range, not a distribution: identical
    // sequences on every platform.
    std::mt19937 gen(seed);
    const std::uint32_t levels = static_cast<std::uint32_t>(sample_scale(model)) + 1u;
    Texture tex;
    tex.rows = rows;
    tex.cols = cols;
    tex.model = model;
    tex.values.resize(static_cast<std::size_t>(rows) * cols);
    for (auto& v : tex.values)
        v = model == SampleModel::Normalized
                ? static_cast<float>(gen()) / 4294967295.0f
                : static_cast<float>(gen() % levels);
    return tex;
}

Texture make_ramp_texture(int rows, int cols, SampleModel model) {
    Texture tex;
    tex.rows = rows;
    tex.cols = cols;
    tex.model = model;
    tex.values.resize(static_cast<std::size_t>(rows) * cols);
    const float scale = sample_scale(model);
    const int denom = rows + cols - 2;
    std::size_t i = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            tex.values[i++] =
                denom > 0 ? std::round(scale * (r + c) / denom) : 0.0f;
    return tex;
}

LightField4D synth_planar(int angular_rows, int angular_cols, int height,
                          int width, const Texture& texture, int disparity,
                          const CenterPolicy& policy, int channels) {
    detail::check_lf_dims(angular_rows, angular_cols, height, width, channels);
    const int cu = policy.center_row(angular_rows);
    const int cv = policy.center_col(angular_cols);
    return make_lightfield(
        angular_rows, angular_cols, height, width, channels,
        [&](int u, int v, int x, int y, int) {
            const int tr = texture.origin_row + x + disparity * (u - cu);
            const int tc = texture.origin_col + y + disparity * (v - cv);
            if (!texture.contains(tr, tc)) {
                std::ostringstream msg;
                msg << "texture too small: view (" << u << "," << v
                    << ") pixel (" << x << "," << y << ") reads texture ("
                    << tr << "," << tc << ") outside " << texture.rows << "x"
                    << texture.cols;
                throw OutOfRangeError(msg.str());
            }
            return texture.at(tr, tc);
        },
        texture.model);
}

} // namespace lfkit
