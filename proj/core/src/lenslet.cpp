#include "lfkit/lenslet.hpp"

#include <sstream>

namespace lfkit {

LensletMosaic to_lenslet(const LightField4D& lf) {
    LensletMosaic mosaic;
    mosaic.angular_rows = lf.angular_rows;
    mosaic.angular_cols = lf.angular_cols;
    mosaic.pixels = Image::zeros(lf.height * lf.angular_rows,
                                 lf.width * lf.angular_cols, lf.channels,
                                 lf.model);
    for (int u = 0; u < lf.angular_rows; ++u)
        for (int v = 0; v < lf.angular_cols; ++v)
            for (int x = 0; x < lf.height; ++x)
                for (int y = 0; y < lf.width; ++y)
                    for (int c = 0; c < lf.channels; ++c)
                        mosaic.pixels.at(x * lf.angular_rows + u,
                                         y * lf.angular_cols + v, c) =
                            lf.at(u, v, x, y, c);
    return mosaic;
}

LightField4D from_lenslet(const LensletMosaic& mosaic) {
    const int U = mosaic.angular_rows;
    const int V = mosaic.angular_cols;
    if (U < 1 || V < 1 || mosaic.pixels.rows % U != 0 ||
        mosaic.pixels.cols % V != 0) {
        std::ostringstream msg;
        msg << "mosaic " << mosaic.pixels.rows << "x" << mosaic.pixels.cols
            << " not divisible by angular dims (" << U << "," << V << ")";
        throw GeometryError(msg.str());
    }
    const int height = mosaic.pixels.rows / U;
    const int width = mosaic.pixels.cols / V;
    return make_lightfield(
        U, V, height, width, mosaic.pixels.channels,
        [&](int u, int v, int x, int y, int c) {
            return mosaic.pixels.at(x * U + u, y * V + v, c);
        },
        mosaic.pixels.model);
}

} // namespace lfkit
