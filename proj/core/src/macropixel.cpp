#include "lfkit/macropixel.hpp"

#include <algorithm>
#include <sstream>

namespace lfkit {

namespace {

// Anchor coordinate of a block along one spatial axis. Partial border blocks
// (pad policy only) reuse the nearest full block's anchor; when the grid is
// smaller than k the anchor clamps to the grid edge.
int anchor_coord(int block, int k, int offset, int extent) {
    const int full_blocks = extent / k;
    const int last_anchor =
        full_blocks >= 1 ? (full_blocks - 1) * k + offset : extent - 1;
    return std::min(block * k + offset, last_anchor);
}

void check_k(const LfDims& dims, int k) {
    const int max_k = std::min(dims.angular_rows, dims.angular_cols);
    if (k < 1 || k > max_k) {
        std::ostringstream msg;
        msg << "macro-pixel size k=" << k << " outside [1, " << max_k
            << "] for angular grid " << dims.angular_rows << "x"
            << dims.angular_cols;
        throw TradeoffError(msg.str());
    }
}

} // namespace

std::pair<int, int> macropixel_output_dims(int height, int width, int k,
                                           SizePolicy size_policy) {
    if (size_policy == SizePolicy::Pad) return {height, width};
    if (height < k || width < k) {
        std::ostringstream msg;
        msg << "crop policy yields empty output: spatial grid " << height << "x"
            << width << " smaller than k=" << k;
        throw EmptyOutputError(msg.str());
    }
    return {(height / k) * k, (width / k) * k};
}

std::pair<int, int> macropixel_window_origin(const LfDims& dims, int k,
                                             const CenterPolicy& policy) {
    check_k(dims, k);
    const int cu = policy.center_row(dims.angular_rows);
    const int cv = policy.center_col(dims.angular_cols);
    if (cu < 0 || cu >= dims.angular_rows || cv < 0 || cv >= dims.angular_cols) {
        std::ostringstream msg;
        msg << "center (" << cu << "," << cv << ") out of bounds for angular grid "
            << dims.angular_rows << "x" << dims.angular_cols;
        throw IndexError(msg.str());
    }
    const int offset = (k - 1) / 2;
    const int u0 = std::clamp(cu - offset, 0, dims.angular_rows - k);
    const int v0 = std::clamp(cv - offset, 0, dims.angular_cols - k);
    return {u0, v0};
}

SampleAddress macropixel_map(const LfDims& dims, int k,
                             const CenterPolicy& policy, SizePolicy size_policy,
                             int r, int c) {
    const auto [u0, v0] = macropixel_window_origin(dims, k, policy);
    const auto [out_h, out_w] = macropixel_output_dims(dims.height, dims.width,
                                                       k, size_policy);
    if (r < 0 || r >= out_h || c < 0 || c >= out_w) {
        std::ostringstream msg;
        msg << "output pixel (" << r << "," << c << ") out of bounds for "
            << out_h << "x" << out_w << " macro-pixel image";
        throw IndexError(msg.str());
    }
    const int offset = (k - 1) / 2;
    return {u0 + r % k, v0 + c % k,
            anchor_coord(r / k, k, offset, dims.height),
            anchor_coord(c / k, k, offset, dims.width)};
}

MacroPixelImage build_macropixel(const LightField4D& lf, int k,
                                 const CenterPolicy& policy,
                                 SizePolicy size_policy) {
    const LfDims dims{lf.angular_rows, lf.angular_cols, lf.height, lf.width};
    const auto [u0, v0] = macropixel_window_origin(dims, k, policy);
    const auto [out_h, out_w] = macropixel_output_dims(lf.height, lf.width, k,
                                                       size_policy);
    const int offset = (k - 1) / 2;

    MacroPixelImage mp;
    mp.pixels = Image::zeros(out_h, out_w, lf.channels, lf.model);
    mp.k = k;
    mp.window_origin_row = u0;
    mp.window_origin_col = v0;
    mp.anchor_offset = offset;
    mp.size_policy = size_policy;
    mp.source_dims = dims;

    for (int r = 0; r < out_h; ++r) {
        const int u = u0 + r % k;
        const int x = anchor_coord(r / k, k, offset, lf.height);
        for (int c = 0; c < out_w; ++c) {
            const int v = v0 + c % k;
            const int y = anchor_coord(c / k, k, offset, lf.width);
            for (int ch = 0; ch < lf.channels; ++ch)
                mp.pixels.at(r, c, ch) = lf.at(u, v, x, y, ch);
        }
    }
    return mp;
}

} // namespace lfkit
