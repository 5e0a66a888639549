#include "lfkit/views.hpp"

#include <algorithm>

namespace lfkit {

Image extract_view(const LightField4D& lf, ViewIndex idx) {
    check_view_index(lf, idx);
    Image out = Image::zeros(lf.height, lf.width, lf.channels, lf.model);
    // (u, v, x, y, c) layout makes a view one contiguous run
    const std::size_t begin = lf.index(idx.u, idx.v, 0, 0, 0);
    std::copy_n(lf.samples.begin() + begin, out.samples.size(),
                out.samples.begin());
    return out;
}

Image center_view(const LightField4D& lf, const CenterPolicy& policy) {
    return extract_view(lf, resolve_center(lf, policy));
}

} // namespace lfkit
