#include "lfkit/disparity.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "lfkit/views.hpp"

namespace lfkit {

namespace {

constexpr double kConfidenceEps = 1e-9;

struct Candidate {
    int d = 0;
    double cost = std::numeric_limits<double>::infinity();
};

// Strict ordering used for both argmin and tie-breaking: lower cost first,
// then smaller |d|, then smaller d.
bool better(const Candidate& a, const Candidate& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (std::abs(a.d) != std::abs(b.d)) return std::abs(a.d) < std::abs(b.d);
    return a.d < b.d;
}

} // namespace

DisparityMap block_match_disparity(const LightField4D& lf, ViewIndex reference,
                                   ViewIndex target, DisparityRange range,
                                   int radius) {
    check_view_index(lf, reference);
    check_view_index(lf, target);
    if (reference == target)
        throw ParameterError("reference and target views must differ");
    const bool row_baseline = reference.v == target.v;
    const bool col_baseline = reference.u == target.u;
    if (!row_baseline && !col_baseline) {
        std::ostringstream msg;
        msg << "views (" << reference.u << "," << reference.v << ") and ("
            << target.u << "," << target.v
            << ") differ on both angular axes; only pure horizontal or "
               "vertical baselines are supported";
        throw BaselineError(msg.str());
    }
    if (range.d_min > range.d_max) {
        std::ostringstream msg;
        msg << "disparity search range [" << range.d_min << ", " << range.d_max
            << "] is empty";
        throw ParameterError(msg.str());
    }
    if (radius < 1)
        throw ParameterError("block radius must be at least 1");

    // Along a row baseline content shifts along x; along a column baseline
    // along y. `steps` is the unsigned angular distance, so the tested shift
    // for candidate d is d * steps pixels.
    const int steps = row_baseline ? std::abs(target.u - reference.u)
                                   : std::abs(target.v - reference.v);
    const Image ref = extract_view(lf, reference);
    const Image tgt = extract_view(lf, target);
    const float scale = sample_scale(lf.model);
    const int block = 2 * radius + 1;
    const double norm = 1.0 / (static_cast<double>(block) * block * lf.channels * scale);

    DisparityMap map;
    map.rows = lf.height;
    map.cols = lf.width;
    map.values.assign(static_cast<std::size_t>(lf.height) * lf.width, 0.0f);
    map.confidence.assign(map.values.size(), 0.0f);
    map.range = range;
    map.radius = radius;
    map.reference = reference;
    map.target = target;

    // A pixel participates only if the block fits in the reference and every
    // candidate's shifted block fits in the target.
    const int max_mag = std::max(std::abs(range.d_min), std::abs(range.d_max)) * steps;
    int x_lo = radius, x_hi = lf.height - radius; // [lo, hi)
    int y_lo = radius, y_hi = lf.width - radius;
    if (row_baseline) {
        x_lo += max_mag;
        x_hi -= max_mag;
    } else {
        y_lo += max_mag;
        y_hi -= max_mag;
    }

    const int n_candidates = range.d_max - range.d_min + 1;
    for (int x = x_lo; x < x_hi; ++x) {
        for (int y = y_lo; y < y_hi; ++y) {
            Candidate best, second;
            for (int d = range.d_min; d <= range.d_max; ++d) {
                const int shift = d * steps;
                double sad = 0.0;
                for (int i = -radius; i <= radius; ++i) {
                    const int rx = x + i;
                    const int tx = row_baseline ? rx - shift : rx;
                    for (int j = -radius; j <= radius; ++j) {
                        const int ry = y + j;
                        const int ty = col_baseline ? ry - shift : ry;
                        for (int c = 0; c < lf.channels; ++c)
                            sad += std::abs(ref.at(rx, ry, c) - tgt.at(tx, ty, c));
                    }
                }
                const Candidate cand{d, sad * norm};
                if (better(cand, best)) {
                    second = best;
                    best = cand;
                } else if (better(cand, second)) {
                    second = cand;
                }
            }
            map.values[map.index(x, y)] = static_cast<float>(best.d);
            if (n_candidates > 1) {
                const double margin =
                    (second.cost - best.cost) / (second.cost + kConfidenceEps);
                map.confidence[map.index(x, y)] = static_cast<float>(margin);
            }
        }
    }
    return map;
}

namespace {

// Mean over channels, one scalar sequence per EPI row.
std::vector<double> epi_row_signal(const EpiSlice& epi, int row) {
    const int spatial = epi.values.cols;
    std::vector<double> signal(static_cast<std::size_t>(spatial));
    for (int y = 0; y < spatial; ++y) {
        double acc = 0.0;
        for (int c = 0; c < epi.values.channels; ++c)
            acc += epi.values.at(row, y, c);
        signal[y] = acc / epi.values.channels;
    }
    return signal;
}

// Zero-normalized cross correlation of a against b shifted by `offset`
// (a[y] vs b[y + offset]), over the overlap. Returns 0 for degenerate
// overlaps or flat signals.
double zncc_at(const std::vector<double>& a, const std::vector<double>& b,
               int offset) {
    const int n = static_cast<int>(a.size());
    const int lo = std::max(0, -offset);
    const int hi = std::min(n, n - offset);
    const int len = hi - lo;
    if (len < 2) return 0.0;
    double mean_a = 0.0, mean_b = 0.0;
    for (int y = lo; y < hi; ++y) {
        mean_a += a[y];
        mean_b += b[y + offset];
    }
    mean_a /= len;
    mean_b /= len;
    double cross = 0.0, var_a = 0.0, var_b = 0.0;
    for (int y = lo; y < hi; ++y) {
        const double da = a[y] - mean_a;
        const double db = b[y + offset] - mean_b;
        cross += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a <= 0.0 || var_b <= 0.0) return 0.0;
    return cross / std::sqrt(var_a * var_b);
}

} // namespace

EpiSlopeFit epi_slope(const EpiSlice& epi) {
    const int views = epi.values.rows;
    if (views < 2) {
        std::ostringstream msg;
        msg << "EPI has angular extent " << views
            << "; slope fitting needs at least 2 views";
        throw InsufficientViewsError(msg.str());
    }
    const int spatial = epi.values.cols;
    const int center = views / 2;
    const int max_shift = spatial / 2;
    const std::vector<double> center_row = epi_row_signal(epi, center);

    // Peak offset of each row against the center row; the center row itself
    // contributes offset 0 at step 0.
    std::vector<double> step(views), offset(views);
    for (int a = 0; a < views; ++a) {
        step[a] = a - center;
        if (a == center) {
            offset[a] = 0.0;
            continue;
        }
        const std::vector<double> row = epi_row_signal(epi, a);
        int best_o = 0;
        double best_score = -std::numeric_limits<double>::infinity();
        for (int o = -max_shift; o <= max_shift; ++o) {
            const double score = zncc_at(row, center_row, o);
            if (score > best_score ||
                (score == best_score && std::abs(o) < std::abs(best_o))) {
                best_score = score;
                best_o = o;
            }
        }
        offset[a] = best_o;
    }

    // Least-squares line through the origin: the center row pins (0, 0).
    double num = 0.0, den = 0.0;
    for (int a = 0; a < views; ++a) {
        num += step[a] * offset[a];
        den += step[a] * step[a];
    }
    EpiSlopeFit fit;
    fit.slope = num / den;
    double sq = 0.0;
    for (int a = 0; a < views; ++a) {
        const double e = offset[a] - fit.slope * step[a];
        sq += e * e;
    }
    fit.residual = std::sqrt(sq / views);
    return fit;
}

} // namespace lfkit
