#pragma once

#include "lfkit/image.hpp"
#include "lfkit/light_field.hpp"

namespace lfkit {

/// Raw-sensor-style tiling: each spatial position contributes a U x V block
/// of its angular samples, so the mosaic is (H*U) x (W*V).
struct LensletMosaic {
    Image pixels;
    int angular_rows = 1; ///< U
    int angular_cols = 1; ///< V
};

/// mosaic[x*U + u, y*V + v, c] = lf[u, v, x, y, c].
LensletMosaic to_lenslet(const LightField4D& lf);

/// Exact inverse of to_lenslet. Throws GeometryError when the mosaic
/// dimensions are not divisible by the angular dimensions.
LightField4D from_lenslet(const LensletMosaic& mosaic);

} // namespace lfkit
