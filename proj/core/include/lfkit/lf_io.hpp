#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "lfkit/light_field.hpp"

namespace lfkit {

/// Contents of a light-field directory's meta.json.
struct LfDirMeta {
    int angular_rows = 1;
    int angular_cols = 1;
    int height = 0;
    int width = 0;
    int channels = 1;
    int bit_depth = 16; ///< 8 or 16
    std::optional<int> center_row;
    std::optional<int> center_col;

    SampleModel sample_model() const {
        return bit_depth == 8 ? SampleModel::U8 : SampleModel::U16;
    }
    CenterPolicy center_policy() const { return {center_row, center_col}; }
};

struct LoadedLf {
    LightField4D lf;
    LfDirMeta meta;
};

/// File name of one view inside a light-field directory: view_UU_VV.png.
std::string view_file_name(int u, int v);

LfDirMeta read_lf_meta(const std::filesystem::path& dir);
void write_lf_meta(const std::filesystem::path& dir, const LfDirMeta& meta);

/// Loads a light-field directory: meta.json plus either view_UU_VV.png files
/// or a lenslet.png mosaic (lenslet form wins when both are present).
LoadedLf read_lf_dir(const std::filesystem::path& dir);

/// Writes meta.json and one PNG per view. An explicit center policy is
/// recorded in the metadata.
void write_lf_views(const std::filesystem::path& dir, const LightField4D& lf,
                    const CenterPolicy& center = {});

/// Writes meta.json and the lenslet.png mosaic.
void write_lf_lenslet(const std::filesystem::path& dir, const LightField4D& lf,
                      const CenterPolicy& center = {});

} // namespace lfkit
