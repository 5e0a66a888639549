#pragma once

#include "lfkit/image.hpp"
#include "lfkit/light_field.hpp"

namespace lfkit {

enum class EpiOrientation {
    Horizontal, ///< fix (u, x), vary (v, y): slice shape V x W
    Vertical,   ///< fix (v, y), vary (u, x): slice shape U x H
};

/// 2D slab with one angular axis (rows) and one spatial axis (cols).
/// fixed_spatial / fixed_angular record which row/column was held constant.
struct EpiSlice {
    Image values;
    EpiOrientation orientation = EpiOrientation::Horizontal;
    int fixed_spatial = 0; ///< x0 for horizontal, y0 for vertical
    int fixed_angular = 0; ///< u0 for horizontal, v0 for vertical
};

/// Horizontal: E[v, y, c] = lf[u0, v, x0, y, c].
/// Vertical:   E[u, x, c] = lf[u, v0, x, y0, c].
EpiSlice extract_epi(const LightField4D& lf, EpiOrientation orientation,
                     int fixed_spatial, int fixed_angular);

} // namespace lfkit
