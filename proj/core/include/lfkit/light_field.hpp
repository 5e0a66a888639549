#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lfkit/errors.hpp"
#include "lfkit/image.hpp"

namespace lfkit {

/// Angular position of one sub-aperture view: u = row, v = column.
struct ViewIndex {
    int u = 0;
    int v = 0;

    bool operator==(const ViewIndex&) const = default;
};

/// Which view counts as the "middle perspective". Unset fields resolve to
/// floor(extent / 2), which biases toward the lower-right view on even grids.
struct CenterPolicy {
    std::optional<int> row;
    std::optional<int> col;

    int center_row(int angular_rows) const { return row.value_or(angular_rows / 2); }
    int center_col(int angular_cols) const { return col.value_or(angular_cols / 2); }
};

/// Dense 4D light field. Canonical index order is (u, v, x, y, c) with
/// row-major layout, angular before spatial, so one view is a contiguous
/// slice. Operations treat instances as immutable; sharing a constructed
/// instance across reader threads is safe.
struct LightField4D {
    int angular_rows = 0; ///< U, vertical viewpoints
    int angular_cols = 0; ///< V, horizontal viewpoints
    int height = 0;       ///< H, spatial rows per view
    int width = 0;        ///< W, spatial cols per view
    int channels = 1;     ///< C, 1 = grayscale, 3 = color
    SampleModel model = SampleModel::U16;
    std::vector<float> samples;

    std::size_t expected_sample_count() const {
        return static_cast<std::size_t>(angular_rows) * angular_cols * height *
               width * channels;
    }

    std::size_t index(int u, int v, int x, int y, int c = 0) const {
        assert(u >= 0 && u < angular_rows && v >= 0 && v < angular_cols);
        assert(x >= 0 && x < height && y >= 0 && y < width);
        assert(c >= 0 && c < channels);
        return (((static_cast<std::size_t>(u) * angular_cols + v) * height + x) *
                    width + y) * channels + c;
    }

    float at(int u, int v, int x, int y, int c = 0) const {
        return samples[index(u, v, x, y, c)];
    }
    float& at(int u, int v, int x, int y, int c = 0) {
        return samples[index(u, v, x, y, c)];
    }

    ViewIndex center(const CenterPolicy& policy = {}) const {
        return {policy.center_row(angular_rows), policy.center_col(angular_cols)};
    }
};

namespace detail {
void check_lf_dims(int angular_rows, int angular_cols, int height, int width,
                   int channels);
}

/// Builds a light field by evaluating `fill(u, v, x, y, c)` at every index,
/// in canonical order. Deterministic.
template <typename Fill>
LightField4D make_lightfield(int angular_rows, int angular_cols, int height,
                             int width, int channels, Fill&& fill,
                             SampleModel model = SampleModel::U16) {
    detail::check_lf_dims(angular_rows, angular_cols, height, width, channels);
    LightField4D lf;
    lf.angular_rows = angular_rows;
    lf.angular_cols = angular_cols;
    lf.height = height;
    lf.width = width;
    lf.channels = channels;
    lf.model = model;
    lf.samples.resize(lf.expected_sample_count());
    std::size_t i = 0;
    for (int u = 0; u < angular_rows; ++u)
        for (int v = 0; v < angular_cols; ++v)
            for (int x = 0; x < height; ++x)
                for (int y = 0; y < width; ++y)
                    for (int c = 0; c < channels; ++c)
                        lf.samples[i++] = static_cast<float>(fill(u, v, x, y, c));
    return lf;
}

/// Convenience overload for a constant fill value.
LightField4D make_lightfield(int angular_rows, int angular_cols, int height,
                             int width, int channels, float value,
                             SampleModel model = SampleModel::U16);

/// Checks the container invariants and returns the first violation as text,
/// or std::nullopt when the light field is well formed. Violations are data,
/// not exceptions.
std::optional<std::string> validate(const LightField4D& lf);

/// Throws IndexError unless `idx` addresses a view of `lf`.
void check_view_index(const LightField4D& lf, ViewIndex idx);

/// Resolves a center policy against the angular grid, throwing IndexError
/// when an explicit center lies outside it.
ViewIndex resolve_center(const LightField4D& lf, const CenterPolicy& policy);

} // namespace lfkit
