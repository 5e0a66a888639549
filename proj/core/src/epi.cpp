#include "lfkit/epi.hpp"

#include <sstream>

namespace lfkit {

namespace {

void check_index(int value, int bound, const char* name) {
    if (value < 0 || value >= bound) {
        std::ostringstream msg;
        msg << name << " " << value << " out of bounds [0, " << bound << ")";
        throw IndexError(msg.str());
    }
}

} // namespace

EpiSlice extract_epi(const LightField4D& lf, EpiOrientation orientation,
                     int fixed_spatial, int fixed_angular) {
    EpiSlice epi;
    epi.orientation = orientation;
    epi.fixed_spatial = fixed_spatial;
    epi.fixed_angular = fixed_angular;

    if (orientation == EpiOrientation::Horizontal) {
        check_index(fixed_spatial, lf.height, "fixed spatial row x0");
        check_index(fixed_angular, lf.angular_rows, "fixed angular row u0");
        epi.values = Image::zeros(lf.angular_cols, lf.width, lf.channels, lf.model);
        for (int v = 0; v < lf.angular_cols; ++v)
            for (int y = 0; y < lf.width; ++y)
                for (int c = 0; c < lf.channels; ++c)
                    epi.values.at(v, y, c) =
                        lf.at(fixed_angular, v, fixed_spatial, y, c);
    } else {
        check_index(fixed_spatial, lf.width, "fixed spatial col y0");
        check_index(fixed_angular, lf.angular_cols, "fixed angular col v0");
        epi.values = Image::zeros(lf.angular_rows, lf.height, lf.channels, lf.model);
        for (int u = 0; u < lf.angular_rows; ++u)
            for (int x = 0; x < lf.height; ++x)
                for (int c = 0; c < lf.channels; ++c)
                    epi.values.at(u, x, c) =
                        lf.at(u, fixed_angular, x, fixed_spatial, c);
    }
    return epi;
}

} // namespace lfkit
