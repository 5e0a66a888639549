#pragma once

#include <cstddef>
#include <vector>

#include "lfkit/epi.hpp"
#include "lfkit/light_field.hpp"

namespace lfkit {

/// Inclusive integer disparity search range, in pixels per view step.
struct DisparityRange {
    int d_min = 0;
    int d_max = 0;
};

/// Per-pixel signed disparity (pixels per unit view step) with a matching
/// confidence in [0, 1]. Border pixels that no full block covers carry
/// confidence 0 and disparity 0.
struct DisparityMap {
    int rows = 0;
    int cols = 0;
    std::vector<float> values;
    std::vector<float> confidence;
    DisparityRange range;
    int radius = 1;
    ViewIndex reference;
    ViewIndex target;

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(x) * cols + y;
    }
    float value_at(int x, int y) const { return values[index(x, y)]; }
    float confidence_at(int x, int y) const { return confidence[index(x, y)]; }
};

/// Sum-of-absolute-differences block matching between two views on a pure
/// horizontal or vertical baseline. For each pixel the integer candidate in
/// range minimizing the block SAD wins; the tested shift in the target view
/// is candidate * step count, so the result is per unit view step. The
/// estimate is signed along the reference-to-target direction: stepping the
/// other way negates it. Ties break toward the smaller |d|. Confidence is
/// the normalized margin (second_best - best) / (second_best + 1e-9) with
/// costs in normalized-intensity units.
DisparityMap block_match_disparity(const LightField4D& lf, ViewIndex reference,
                                   ViewIndex target, DisparityRange range,
                                   int radius);

/// Slope of the dominant EPI line in pixels per view step, plus the RMS
/// error of the per-row offsets against the fitted line.
struct EpiSlopeFit {
    double slope = 0.0;
    double residual = 0.0;
};

/// Fits the slope by cross-correlating every EPI row against the center row
/// (integer peak offsets) and least-squares fitting offset vs. view step.
/// Needs at least 2 views.
EpiSlopeFit epi_slope(const EpiSlice& epi);

} // namespace lfkit
