#include "lfkit/light_field.hpp"

#include <sstream>

namespace lfkit {

namespace detail {

void check_lf_dims(int angular_rows, int angular_cols, int height, int width,
                   int channels) {
    if (angular_rows < 1 || angular_cols < 1 || height < 1 || width < 1) {
        std::ostringstream msg;
        msg << "light field dimensions must be positive, got U=" << angular_rows
            << " V=" << angular_cols << " H=" << height << " W=" << width;
        throw InvalidDimensionError(msg.str());
    }
    if (channels != 1 && channels != 3) {
        std::ostringstream msg;
        msg << "channel count must be 1 or 3, got " << channels;
        throw InvalidDimensionError(msg.str());
    }
}

} // namespace detail

LightField4D make_lightfield(int angular_rows, int angular_cols, int height,
                             int width, int channels, float value,
                             SampleModel model) {
    return make_lightfield(
        angular_rows, angular_cols, height, width, channels,
        [value](int, int, int, int, int) { return value; }, model);
}

std::optional<std::string> validate(const LightField4D& lf) {
    std::ostringstream msg;
    if (lf.angular_rows < 1 || lf.angular_cols < 1) {
        msg << "angular grid must be at least 1x1, got " << lf.angular_rows << "x"
            << lf.angular_cols;
        return msg.str();
    }
    if (lf.height < 1 || lf.width < 1) {
        msg << "spatial grid must be at least 1x1, got " << lf.height << "x"
            << lf.width;
        return msg.str();
    }
    if (lf.channels != 1 && lf.channels != 3) {
        msg << "channel count must be 1 or 3, got " << lf.channels;
        return msg.str();
    }
    if (lf.samples.size() != lf.expected_sample_count()) {
        msg << "sample count " << lf.samples.size()
            << " does not match U*V*H*W*C = " << lf.expected_sample_count();
        return msg.str();
    }
    return std::nullopt;
}

void check_view_index(const LightField4D& lf, ViewIndex idx) {
    if (idx.u < 0 || idx.u >= lf.angular_rows || idx.v < 0 ||
        idx.v >= lf.angular_cols) {
        std::ostringstream msg;
        msg << "view index (" << idx.u << "," << idx.v
            << ") out of bounds for angular grid " << lf.angular_rows << "x"
            << lf.angular_cols;
        throw IndexError(msg.str());
    }
}

ViewIndex resolve_center(const LightField4D& lf, const CenterPolicy& policy) {
    ViewIndex c{policy.center_row(lf.angular_rows),
                policy.center_col(lf.angular_cols)};
    check_view_index(lf, c);
    return c;
}

} // namespace lfkit
