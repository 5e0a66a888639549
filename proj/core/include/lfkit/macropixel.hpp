#pragma once

#include <utility>

#include "lfkit/image.hpp"
#include "lfkit/light_field.hpp"

namespace lfkit {

/// What to do when the spatial grid does not divide by k.
enum class SizePolicy {
    Crop, ///< keep the largest k-divisible prefix (bottom/right remainder dropped)
    Pad,  ///< keep H x W; partial border blocks replicate the nearest full anchor
};

/// Spatial dimensions of a light field, for the pure index map.
struct LfDims {
    int angular_rows = 0;
    int angular_cols = 0;
    int height = 0;
    int width = 0;
};

/// Source sample selected for one output pixel.
struct SampleAddress {
    int u = 0;
    int v = 0;
    int x = 0;
    int y = 0;

    bool operator==(const SampleAddress&) const = default;
};

/// 2D image whose k x k blocks hold the k^2 angular samples of one spatial
/// anchor. Every pixel is an exact copy of a source sample; the metadata
/// records which view window and policies produced it.
struct MacroPixelImage {
    Image pixels;
    int k = 1;
    int window_origin_row = 0; ///< u0, top-left view of the k x k window
    int window_origin_col = 0; ///< v0
    int anchor_offset = 0;     ///< floor((k-1)/2), within-block anchor offset
    SizePolicy size_policy = SizePolicy::Crop;
    LfDims source_dims;
};

/// Output dimensions for a given spatial grid, k and policy. Throws
/// EmptyOutputError when crop would produce an empty image.
std::pair<int, int> macropixel_output_dims(int height, int width, int k,
                                           SizePolicy size_policy);

/// Top-left view of the k x k angular window: centered on the middle
/// perspective with floor bias, shifted inward when it would leave the grid.
/// Throws TradeoffError when k is outside [1, min(U, V)].
std::pair<int, int> macropixel_window_origin(const LfDims& dims, int k,
                                             const CenterPolicy& policy = {});

/// The pure (r, c) -> (u, v, x, y) index map behind build_macropixel:
///   block   (bi, bj) = (r / k, c / k)
///   view    (u, v)   = (u0 + r mod k, v0 + c mod k)
///   anchor  (x, y)   = (bi*k, bj*k) + floor((k-1)/2), clamped to the last
///                      full block's anchor under the pad policy.
/// Throws IndexError for (r, c) outside the output dimensions.
SampleAddress macropixel_map(const LfDims& dims, int k,
                             const CenterPolicy& policy, SizePolicy size_policy,
                             int r, int c);

/// Replaces each spatial anchor of the middle perspective with a k x k
/// macro-pixel holding the anchor's samples across the view window. k = 1
/// reproduces the center view exactly. No interpolation: every output pixel
/// equals one source sample, channels mapped independently.
MacroPixelImage build_macropixel(const LightField4D& lf, int k,
                                 const CenterPolicy& policy = {},
                                 SizePolicy size_policy = SizePolicy::Crop);

} // namespace lfkit
