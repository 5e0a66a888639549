#include "lfkit/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lfkit/lenslet.hpp"
#include "lfkit/lf_io.hpp"
#include "lfkit/png_io.hpp"
#include "lfkit/views.hpp"

namespace fs = std::filesystem;

namespace lfkit {

std::string to_string(Split split) {
    switch (split) {
    case Split::Train: return "train";
    case Split::Test: return "test";
    default: return "unassigned";
    }
}

namespace {

Split parse_split(const std::string& s) {
    if (s == "train") return Split::Train;
    if (s == "test") return Split::Test;
    if (s == "unassigned") return Split::Unassigned;
    throw ParameterError("unknown split value '" + s + "'");
}

std::string kind_name(ReprSpec::Kind kind) {
    switch (kind) {
    case ReprSpec::Kind::Center: return "center";
    case ReprSpec::Kind::Macropixel: return "macropixel";
    case ReprSpec::Kind::Lenslet: return "lenslet";
    default: return "epi";
    }
}

} // namespace

std::string ReprSpec::token() const {
    switch (kind) {
    case Kind::Center: return "center";
    case Kind::Macropixel: return "macropixel_k" + std::to_string(k);
    case Kind::Lenslet: return "lenslet";
    default:
        return epi_orientation == EpiOrientation::Horizontal ? "epi_h" : "epi_v";
    }
}

std::vector<std::string> standard_categories() {
    return {"expression", "illumination", "occlusion", "pose"};
}

ScanResult scan_corpus(const fs::path& root, const LayoutSpec& layout) {
    if (!fs::is_directory(root))
        throw IoError("corpus root " + root.string() + " is not a directory");

    std::regex pattern;
    try {
        pattern = std::regex(layout.pattern);
    } catch (const std::regex_error& e) {
        throw ParameterError(std::string("invalid layout pattern: ") + e.what());
    }

    std::vector<std::string> dirs;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file() && entry.path().filename() == "meta.json")
            dirs.push_back(
                fs::relative(entry.path().parent_path(), root).generic_string());
    }
    std::sort(dirs.begin(), dirs.end());

    ScanResult result;
    result.manifest.category_set = layout.categories;
    for (const std::string& dir : dirs) {
        std::smatch m;
        if (!std::regex_match(dir, m, pattern)) {
            result.skipped.push_back({dir, "does not match the layout pattern"});
            continue;
        }
        SampleRecord rec;
        rec.path = dir;
        rec.subject = m[1].str();
        rec.session = std::stoi(m[2].str());
        rec.variation = m[3].str();
        rec.sublabel = m[4].matched ? m[4].str() : "";
        if (std::find(layout.categories.begin(), layout.categories.end(),
                      rec.variation) == layout.categories.end()) {
            result.skipped.push_back(
                {dir, "unknown variation category '" + rec.variation + "'"});
            continue;
        }
        result.manifest.records.push_back(std::move(rec));
    }
    if (result.manifest.records.empty())
        result.warnings.push_back("empty manifest: no light fields found under " +
                                  root.string());
    return result;
}

SplitResult split_by_variation(const DatasetManifest& manifest,
                               const std::string& held_out) {
    if (std::find(manifest.category_set.begin(), manifest.category_set.end(),
                  held_out) == manifest.category_set.end()) {
        std::ostringstream msg;
        msg << "unknown variation category '" << held_out << "'; valid:";
        for (const auto& c : manifest.category_set) msg << " " << c;
        throw ParameterError(msg.str());
    }
    SplitResult result;
    result.manifest = manifest;
    result.manifest.held_out = held_out;
    std::size_t test_count = 0;
    for (auto& rec : result.manifest.records) {
        rec.split = rec.variation == held_out ? Split::Test : Split::Train;
        if (rec.split == Split::Test) ++test_count;
    }
    if (test_count == 0)
        result.warnings.push_back("held-out category '" + held_out +
                                  "' has no records; test split is empty");
    return result;
}

namespace {

Image render_record(const LoadedLf& loaded, const ReprSpec& spec) {
    const LightField4D& lf = loaded.lf;
    const CenterPolicy center = loaded.meta.center_policy();
    switch (spec.kind) {
    case ReprSpec::Kind::Center:
        return center_view(lf, center);
    case ReprSpec::Kind::Macropixel:
        return build_macropixel(lf, spec.k, center, spec.size_policy).pixels;
    case ReprSpec::Kind::Lenslet:
        return to_lenslet(lf).pixels;
    default: {
        int fixed_spatial, fixed_angular;
        if (spec.epi_orientation == EpiOrientation::Horizontal) {
            fixed_spatial = spec.epi_fixed_spatial.value_or(lf.height / 2);
            fixed_angular =
                spec.epi_fixed_angular.value_or(center.center_row(lf.angular_rows));
        } else {
            fixed_spatial = spec.epi_fixed_spatial.value_or(lf.width / 2);
            fixed_angular =
                spec.epi_fixed_angular.value_or(center.center_col(lf.angular_cols));
        }
        return extract_epi(lf, spec.epi_orientation, fixed_spatial, fixed_angular)
            .values;
    }
    }
}

nlohmann::ordered_json repr_to_json(const ReprSpec& spec) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(spec.kind);
    if (spec.kind == ReprSpec::Kind::Macropixel) {
        j["k"] = spec.k;
        j["size_policy"] = spec.size_policy == SizePolicy::Crop ? "crop" : "pad";
    }
    if (spec.kind == ReprSpec::Kind::Epi) {
        j["orientation"] =
            spec.epi_orientation == EpiOrientation::Horizontal ? "h" : "v";
        if (spec.epi_fixed_spatial) j["fixed_spatial"] = *spec.epi_fixed_spatial;
        if (spec.epi_fixed_angular) j["fixed_angular"] = *spec.epi_fixed_angular;
    }
    return j;
}

ReprSpec repr_from_json(const nlohmann::json& j) {
    ReprSpec spec;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "center") spec.kind = ReprSpec::Kind::Center;
    else if (kind == "macropixel") spec.kind = ReprSpec::Kind::Macropixel;
    else if (kind == "lenslet") spec.kind = ReprSpec::Kind::Lenslet;
    else if (kind == "epi") spec.kind = ReprSpec::Kind::Epi;
    else throw ParameterError("unknown representation kind '" + kind + "'");
    if (j.contains("k")) spec.k = j["k"].get<int>();
    if (j.contains("size_policy"))
        spec.size_policy = j["size_policy"] == "pad" ? SizePolicy::Pad
                                                     : SizePolicy::Crop;
    if (j.contains("orientation"))
        spec.epi_orientation = j["orientation"] == "v" ? EpiOrientation::Vertical
                                                       : EpiOrientation::Horizontal;
    if (j.contains("fixed_spatial"))
        spec.epi_fixed_spatial = j["fixed_spatial"].get<int>();
    if (j.contains("fixed_angular"))
        spec.epi_fixed_angular = j["fixed_angular"].get<int>();
    return spec;
}

void write_report_json(const fs::path& path, const ExportReport& report) {
    nlohmann::ordered_json j;
    j["succeeded"] = report.succeeded;
    j["failed"] = nlohmann::ordered_json::array();
    for (const auto& f : report.failed)
        j["failed"].push_back({{"path", f.path}, {"reason", f.reason}});
    std::ofstream out(path);
    if (!out) throw IoError(path.string() + ": cannot open for writing");
    out << j.dump(2) << "\n";
}

} // namespace

std::string export_file_name(const SampleRecord& record, const ReprSpec& spec) {
    std::string stem = record.path;
    std::replace(stem.begin(), stem.end(), '/', '_');
    return stem + "__" + spec.token() + ".png";
}

ExportReport export_representation(const DatasetManifest& manifest,
                                   const fs::path& corpus_root,
                                   const ReprSpec& spec, const fs::path& out_dir,
                                   int jobs) {
    if (jobs < 1) throw ParameterError("jobs must be at least 1");
    fs::create_directories(out_dir);

    const std::size_t n = manifest.records.size();
    // Per-record outcome slots keep the report deterministic under
    // concurrency: slot i belongs to record i alone.
    struct Outcome {
        bool attempted = false;
        bool ok = false;
        std::string reason;
    };
    std::vector<Outcome> outcomes(n);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};

    auto worker = [&] {
        while (!abort.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            const SampleRecord& rec = manifest.records[i];
            outcomes[i].attempted = true;
            Image image;
            try {
                const LoadedLf loaded = read_lf_dir(corpus_root / rec.path);
                image = render_record(loaded, spec);
            } catch (const std::exception& e) {
                outcomes[i].reason = e.what();
                continue; // unreadable record: report and keep going
            }
            try {
                write_png(out_dir / export_file_name(rec, spec), image);
                outcomes[i].ok = true;
            } catch (const std::exception& e) {
                // output side failed (disk full, permissions): stop the run
                outcomes[i].reason = e.what();
                abort.store(true);
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ExportReport report;
    std::string abort_reason;
    for (std::size_t i = 0; i < n; ++i) {
        if (!outcomes[i].attempted) continue;
        if (outcomes[i].ok) ++report.succeeded;
        else {
            report.failed.push_back({manifest.records[i].path, outcomes[i].reason});
            if (abort.load() && abort_reason.empty())
                abort_reason = outcomes[i].reason;
        }
    }

    DatasetManifest copy = manifest;
    copy.representation = spec;
    write_manifest_csv(out_dir / "manifest.csv", copy);
    write_manifest_json(out_dir / "manifest.json", copy);
    write_report_json(out_dir / "report.json", report);

    if (abort.load())
        throw IoError("export aborted after output write failure: " +
                      abort_reason);
    return report;
}

// --- manifest formats ------------------------------------------------------

namespace {

const char* kCsvHeader = "path,subject,session,variation,split";

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::vector<std::string> parse_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string encode_variation(const SampleRecord& rec) {
    return rec.sublabel.empty() ? rec.variation
                                : rec.variation + ":" + rec.sublabel;
}

void decode_variation(const std::string& s, SampleRecord& rec) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        rec.variation = s;
        rec.sublabel.clear();
    } else {
        rec.variation = s.substr(0, colon);
        rec.sublabel = s.substr(colon + 1);
    }
}

// category_set = standard four plus anything the records use
std::vector<std::string> inferred_categories(const std::vector<SampleRecord>& records) {
    std::vector<std::string> cats = standard_categories();
    for (const auto& rec : records)
        if (std::find(cats.begin(), cats.end(), rec.variation) == cats.end())
            cats.push_back(rec.variation);
    std::sort(cats.begin(), cats.end());
    return cats;
}

} // namespace

void write_manifest_csv(const fs::path& path, const DatasetManifest& manifest) {
    std::ofstream out(path);
    if (!out) throw IoError(path.string() + ": cannot open for writing");
    out << kCsvHeader << "\n";
    for (const auto& rec : manifest.records)
        out << csv_field(rec.path) << "," << csv_field(rec.subject) << ","
            << rec.session << "," << csv_field(encode_variation(rec)) << ","
            << to_string(rec.split) << "\n";
    if (!out) throw IoError(path.string() + ": write failed");
}

DatasetManifest read_manifest_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path.string() + ": cannot open");
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw IoError(path.string() + ": expected header '" +
                      std::string(kCsvHeader) + "'");
    DatasetManifest manifest;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = parse_csv_line(line);
        if (fields.size() != 5) {
            std::ostringstream msg;
            msg << path.string() << ":" << line_no << ": expected 5 fields, got "
                << fields.size();
            throw IoError(msg.str());
        }
        SampleRecord rec;
        rec.path = fields[0];
        rec.subject = fields[1];
        try {
            rec.session = std::stoi(fields[2]);
        } catch (const std::exception&) {
            throw IoError(path.string() + ":" + std::to_string(line_no) +
                          ": invalid session '" + fields[2] + "'");
        }
        decode_variation(fields[3], rec);
        rec.split = parse_split(fields[4]);
        manifest.records.push_back(std::move(rec));
    }
    manifest.category_set = inferred_categories(manifest.records);
    return manifest;
}

void write_manifest_json(const fs::path& path, const DatasetManifest& manifest) {
    nlohmann::ordered_json j;
    j["categories"] = manifest.category_set;
    j["held_out"] = manifest.held_out ? nlohmann::json(*manifest.held_out)
                                      : nlohmann::json(nullptr);
    j["representation"] = manifest.representation
                              ? nlohmann::json(repr_to_json(*manifest.representation))
                              : nlohmann::json(nullptr);
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& rec : manifest.records) {
        nlohmann::ordered_json r;
        r["path"] = rec.path;
        r["subject"] = rec.subject;
        r["session"] = rec.session;
        r["variation"] = rec.variation;
        r["sublabel"] = rec.sublabel;
        r["split"] = to_string(rec.split);
        j["records"].push_back(std::move(r));
    }
    std::ofstream out(path);
    if (!out) throw IoError(path.string() + ": cannot open for writing");
    out << j.dump(2) << "\n";
    if (!out) throw IoError(path.string() + ": write failed");
}

DatasetManifest read_manifest_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path.string() + ": cannot open");
    try {
        nlohmann::json j;
        in >> j;
        DatasetManifest manifest;
        manifest.category_set = j.at("categories").get<std::vector<std::string>>();
        if (!j.at("held_out").is_null())
            manifest.held_out = j["held_out"].get<std::string>();
        if (!j.at("representation").is_null())
            manifest.representation = repr_from_json(j["representation"]);
        for (const auto& r : j.at("records")) {
            SampleRecord rec;
            rec.path = r.at("path").get<std::string>();
            rec.subject = r.at("subject").get<std::string>();
            rec.session = r.at("session").get<int>();
            rec.variation = r.at("variation").get<std::string>();
            rec.sublabel = r.at("sublabel").get<std::string>();
            rec.split = parse_split(r.at("split").get<std::string>());
            manifest.records.push_back(std::move(rec));
        }
        return manifest;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

DatasetManifest read_manifest(const fs::path& path) {
    if (path.extension() == ".json") return read_manifest_json(path);
    if (path.extension() == ".csv") return read_manifest_csv(path);
    throw ParameterError("manifest path must end in .csv or .json: " +
                         path.string());
}

} // namespace lfkit
