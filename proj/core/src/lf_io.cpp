#include "lfkit/lf_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lfkit/lenslet.hpp"
#include "lfkit/png_io.hpp"
#include "lfkit/views.hpp"

namespace fs = std::filesystem;

namespace lfkit {

namespace {

void check_meta(const fs::path& dir, const LfDirMeta& meta) {
    std::ostringstream msg;
    msg << (dir / "meta.json").string() << ": ";
    if (meta.angular_rows < 1 || meta.angular_cols < 1 || meta.height < 1 ||
        meta.width < 1) {
        msg << "dimensions must be positive";
        throw IoError(msg.str());
    }
    if (meta.channels != 1 && meta.channels != 3) {
        msg << "channels must be 1 or 3, got " << meta.channels;
        throw IoError(msg.str());
    }
    if (meta.bit_depth != 8 && meta.bit_depth != 16) {
        msg << "bit_depth must be 8 or 16, got " << meta.bit_depth;
        throw IoError(msg.str());
    }
}

void check_image_shape(const fs::path& file, const Image& img,
                       const LfDirMeta& meta, int rows, int cols) {
    if (img.rows != rows || img.cols != cols || img.channels != meta.channels ||
        img.model != meta.sample_model()) {
        std::ostringstream msg;
        msg << file.string() << ": expected " << rows << "x" << cols << "x"
            << meta.channels << " at " << meta.bit_depth << " bit, got "
            << img.rows << "x" << img.cols << "x" << img.channels << " at "
            << (img.model == SampleModel::U8 ? 8 : 16) << " bit";
        throw IoError(msg.str());
    }
}

} // namespace

std::string view_file_name(int u, int v) {
    char name[32];
    std::snprintf(name, sizeof(name), "view_%02d_%02d.png", u, v);
    return name;
}

LfDirMeta read_lf_meta(const fs::path& dir) {
    const fs::path file = dir / "meta.json";
    std::ifstream in(file);
    if (!in) throw IoError(file.string() + ": cannot open");
    nlohmann::json j;
    try {
        in >> j;
        LfDirMeta meta;
        meta.angular_rows = j.at("angular_rows").get<int>();
        meta.angular_cols = j.at("angular_cols").get<int>();
        meta.height = j.at("height").get<int>();
        meta.width = j.at("width").get<int>();
        meta.channels = j.at("channels").get<int>();
        meta.bit_depth = j.at("bit_depth").get<int>();
        if (j.contains("center_row")) meta.center_row = j["center_row"].get<int>();
        if (j.contains("center_col")) meta.center_col = j["center_col"].get<int>();
        check_meta(dir, meta);
        return meta;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(file.string() + ": " + e.what());
    }
}

void write_lf_meta(const fs::path& dir, const LfDirMeta& meta) {
    nlohmann::ordered_json j;
    j["angular_rows"] = meta.angular_rows;
    j["angular_cols"] = meta.angular_cols;
    j["height"] = meta.height;
    j["width"] = meta.width;
    j["channels"] = meta.channels;
    j["bit_depth"] = meta.bit_depth;
    if (meta.center_row) j["center_row"] = *meta.center_row;
    if (meta.center_col) j["center_col"] = *meta.center_col;
    const fs::path file = dir / "meta.json";
    std::ofstream out(file);
    if (!out) throw IoError(file.string() + ": cannot open for writing");
    out << j.dump(2) << "\n";
    if (!out) throw IoError(file.string() + ": write failed");
}

LoadedLf read_lf_dir(const fs::path& dir) {
    const LfDirMeta meta = read_lf_meta(dir);
    LoadedLf loaded;
    loaded.meta = meta;

    const fs::path lenslet_file = dir / "lenslet.png";
    if (fs::exists(lenslet_file)) {
        LensletMosaic mosaic;
        mosaic.pixels = read_png(lenslet_file);
        mosaic.angular_rows = meta.angular_rows;
        mosaic.angular_cols = meta.angular_cols;
        check_image_shape(lenslet_file, mosaic.pixels, meta,
                          meta.height * meta.angular_rows,
                          meta.width * meta.angular_cols);
        loaded.lf = from_lenslet(mosaic);
        return loaded;
    }

    LightField4D lf;
    lf.angular_rows = meta.angular_rows;
    lf.angular_cols = meta.angular_cols;
    lf.height = meta.height;
    lf.width = meta.width;
    lf.channels = meta.channels;
    lf.model = meta.sample_model();
    lf.samples.resize(lf.expected_sample_count());
    for (int u = 0; u < meta.angular_rows; ++u) {
        for (int v = 0; v < meta.angular_cols; ++v) {
            const fs::path file = dir / view_file_name(u, v);
            const Image view = read_png(file);
            check_image_shape(file, view, meta, meta.height, meta.width);
            std::copy(view.samples.begin(), view.samples.end(),
                      lf.samples.begin() + lf.index(u, v, 0, 0, 0));
        }
    }
    loaded.lf = lf;
    return loaded;
}

namespace {

LfDirMeta meta_for(const LightField4D& lf, const CenterPolicy& center) {
    LfDirMeta meta;
    meta.angular_rows = lf.angular_rows;
    meta.angular_cols = lf.angular_cols;
    meta.height = lf.height;
    meta.width = lf.width;
    meta.channels = lf.channels;
    meta.bit_depth = lf.model == SampleModel::U8 ? 8 : 16;
    meta.center_row = center.row;
    meta.center_col = center.col;
    return meta;
}

} // namespace

void write_lf_views(const fs::path& dir, const LightField4D& lf,
                    const CenterPolicy& center) {
    fs::create_directories(dir);
    write_lf_meta(dir, meta_for(lf, center));
    for (int u = 0; u < lf.angular_rows; ++u)
        for (int v = 0; v < lf.angular_cols; ++v)
            write_png(dir / view_file_name(u, v), extract_view(lf, {u, v}));
}

void write_lf_lenslet(const fs::path& dir, const LightField4D& lf,
                      const CenterPolicy& center) {
    fs::create_directories(dir);
    write_lf_meta(dir, meta_for(lf, center));
    write_png(dir / "lenslet.png", to_lenslet(lf).pixels);
}

} // namespace lfkit
