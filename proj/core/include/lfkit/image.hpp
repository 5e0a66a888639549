#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace lfkit {

/// Value domain of the samples held by a container. Integer models store
/// integer-valued samples (exact in a float up to 24 bits); Normalized
/// stores intensities in [0, 1].
enum class SampleModel {
    Normalized, ///< floating point intensities in [0, 1]
    U8,         ///< 8-bit integer samples, 0..255
    U16,        ///< 16-bit integer samples, 0..65535
};

/// Full-scale value of a sample model (1, 255 or 65535).
inline float sample_scale(SampleModel model) {
    switch (model) {
    case SampleModel::U8: return 255.0f;
    case SampleModel::U16: return 65535.0f;
    default: return 1.0f;
    }
}

/// Dense 2D image, row-major (row, col, channel), channel fastest.
struct Image {
    int rows = 0;
    int cols = 0;
    int channels = 1;
    SampleModel model = SampleModel::U16;
    std::vector<float> samples;

    static Image zeros(int rows, int cols, int channels,
                       SampleModel model = SampleModel::U16) {
        Image img;
        img.rows = rows;
        img.cols = cols;
        img.channels = channels;
        img.model = model;
        img.samples.assign(static_cast<std::size_t>(rows) * cols * channels, 0.0f);
        return img;
    }

    std::size_t index(int r, int c, int ch = 0) const {
        assert(r >= 0 && r < rows && c >= 0 && c < cols && ch >= 0 && ch < channels);
        return (static_cast<std::size_t>(r) * cols + c) * channels + ch;
    }

    float at(int r, int c, int ch = 0) const { return samples[index(r, c, ch)]; }
    float& at(int r, int c, int ch = 0) { return samples[index(r, c, ch)]; }

    bool same_shape(const Image& other) const {
        return rows == other.rows && cols == other.cols && channels == other.channels;
    }
};

} // namespace lfkit
