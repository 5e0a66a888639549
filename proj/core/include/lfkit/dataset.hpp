#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lfkit/epi.hpp"
#include "lfkit/macropixel.hpp"

namespace lfkit {

enum class Split { Unassigned, Train, Test };

std::string to_string(Split split);

/// One light field of the corpus.
struct SampleRecord {
    std::string path; ///< directory path relative to the corpus root
    std::string subject;
    int session = 1; ///< 1 or 2
    std::string variation; ///< category, from the manifest's category set
    std::string sublabel;  ///< free-form refinement, may be empty
    Split split = Split::Unassigned;

    bool operator==(const SampleRecord&) const = default;
};

/// Representation applied by an export, recorded in the manifest copy.
struct ReprSpec {
    enum class Kind { Center, Macropixel, Lenslet, Epi };
    Kind kind = Kind::Macropixel;
    int k = 1;                                   ///< macropixel only
    SizePolicy size_policy = SizePolicy::Crop;   ///< macropixel only
    EpiOrientation epi_orientation = EpiOrientation::Horizontal;
    std::optional<int> epi_fixed_spatial;        ///< default: center row/col
    std::optional<int> epi_fixed_angular;        ///< default: center view

    std::string token() const; ///< e.g. "macropixel_k3", used in file names
};

struct DatasetManifest {
    std::vector<SampleRecord> records;
    std::vector<std::string> category_set;
    std::optional<std::string> held_out;
    std::optional<ReprSpec> representation;
};

/// The four standard variation categories, sorted.
std::vector<std::string> standard_categories();

/// Maps relative light-field directory paths to (subject, session,
/// variation, sublabel). Capture groups of `pattern`: 1 = subject,
/// 2 = session, 3 = variation category, 4 = optional sublabel.
struct LayoutSpec {
    std::string pattern =
        R"(^([^/]+)/session([12])/([a-z]+)(?:_([A-Za-z0-9-]+))?_([0-9]+)$)";
    std::vector<std::string> categories = standard_categories();
};

struct SkippedEntry {
    std::string path;
    std::string reason;
};

struct ScanResult {
    DatasetManifest manifest;
    std::vector<SkippedEntry> skipped;
    std::vector<std::string> warnings;
};

/// Walks `root` for directories containing meta.json, in lexicographic
/// order of their relative paths, and parses each against the layout.
/// Unparsable entries land in the skipped report. All splits start
/// unassigned.
ScanResult scan_corpus(const std::filesystem::path& root,
                       const LayoutSpec& layout = {});

struct SplitResult {
    DatasetManifest manifest;
    std::vector<std::string> warnings;
};

/// Assigns every record of the held-out category to test and the rest to
/// train. Pure; applying it twice is a no-op.
SplitResult split_by_variation(const DatasetManifest& manifest,
                               const std::string& held_out);

struct ExportFailure {
    std::string path;
    std::string reason;
};

struct ExportReport {
    int succeeded = 0;
    std::vector<ExportFailure> failed;
};

/// Renders every record under `corpus_root` with the given representation
/// into one PNG per record under `out_dir`, names derived from the record
/// and the representation token. Writes manifest.csv, manifest.json (with
/// the representation metadata) and report.json alongside. Unreadable light
/// fields become per-record failures; an output write error aborts after
/// writing the partial report. With jobs > 1 records render concurrently;
/// output bytes are identical regardless.
ExportReport export_representation(const DatasetManifest& manifest,
                                   const std::filesystem::path& corpus_root,
                                   const ReprSpec& spec,
                                   const std::filesystem::path& out_dir,
                                   int jobs = 1);

/// Deterministic output file name of one record: the relative path with
/// '/' replaced by '_', plus the representation token.
std::string export_file_name(const SampleRecord& record, const ReprSpec& spec);

// Manifest file formats. The CSV column set is fixed
// (path,subject,session,variation,split; variation encodes an optional
// sublabel as "category:sublabel"); the JSON twin additionally carries the
// category set, hold-out and representation metadata.
void write_manifest_csv(const std::filesystem::path& path,
                        const DatasetManifest& manifest);
DatasetManifest read_manifest_csv(const std::filesystem::path& path);
void write_manifest_json(const std::filesystem::path& path,
                         const DatasetManifest& manifest);
DatasetManifest read_manifest_json(const std::filesystem::path& path);

/// Dispatches on the file extension (.csv or .json).
DatasetManifest read_manifest(const std::filesystem::path& path);

} // namespace lfkit
