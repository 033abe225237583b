/**
 * @file dataset.hpp
 * @brief Reference parts, repeated pixel measurements and train/test splits
 *
 * A dataset file is plain CSV, one part per line:
 *
 *     # name=glass-gradient
 *     1mm,1,train,49.39,49.37,...
 *
 * i.e. `part_id,true_diameter_mm,role,m1,...,mN` with role one of
 * `train` / `test`. Blank lines and further `#` lines are ignored.
 */

#pragma once

#include <gaugecal/appendix_data.hpp>
#include <gaugecal/error.hpp>
#include <gaugecal/io.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace gaugecal {

// =============================================================================
// Types
// =============================================================================

/// A part of known diameter and its repeated pixel measurements.
class ReferencePart {
public:
    ReferencePart(std::string id, double true_diameter_mm, std::vector<double> pixel_measurements)
        : id_(std::move(id)), true_diameter_mm_(true_diameter_mm), pixels_(std::move(pixel_measurements)) {
        if (id_.empty()) {
            throw DataError("part id must not be empty");
        }
        if (!(true_diameter_mm_ > 0.0) || !std::isfinite(true_diameter_mm_)) {
            throw DataError("part '" + id_ + "': true diameter must be > 0");
        }
        if (pixels_.empty()) {
            throw DataError("part '" + id_ + "': empty measurement list");
        }
        for (double p : pixels_) {
            if (!(p > 0.0) || !std::isfinite(p)) {
                throw DataError("part '" + id_ + "': pixel measurements must be > 0");
            }
        }
        mean_pixels_ = std::accumulate(pixels_.begin(), pixels_.end(), 0.0) / static_cast<double>(pixels_.size());
    }

    const std::string& id() const noexcept { return id_; }
    double true_diameter_mm() const noexcept { return true_diameter_mm_; }
    const std::vector<double>& pixel_measurements() const noexcept { return pixels_; }
    double mean_pixels() const noexcept { return mean_pixels_; }

private:
    std::string id_;
    double true_diameter_mm_;
    std::vector<double> pixels_;
    double mean_pixels_ = 0.0;
};

struct DatasetSplit {
    std::set<std::string> training_ids;
    std::set<std::string> test_ids;
};

/// An immutable collection of reference parts with a validated split.
class MeasurementDataset {
public:
    MeasurementDataset(std::string name, std::vector<ReferencePart> parts, DatasetSplit split)
        : name_(std::move(name)), parts_(std::move(parts)), split_(std::move(split)) {
        validate();
    }

    const std::string& name() const noexcept { return name_; }
    const std::vector<ReferencePart>& parts() const noexcept { return parts_; }
    const DatasetSplit& split() const noexcept { return split_; }

    const ReferencePart& part(std::string_view id) const {
        auto it = std::find_if(parts_.begin(), parts_.end(), [&](const ReferencePart& p) { return p.id() == id; });
        if (it == parts_.end()) {
            throw InvalidArgument("dataset '" + name_ + "' has no part '" + std::string(id) + "'");
        }
        return *it;
    }

    bool contains(std::string_view id) const {
        return std::any_of(parts_.begin(), parts_.end(), [&](const ReferencePart& p) { return p.id() == id; });
    }

    /// Parts in the given id set, in dataset order.
    std::vector<ReferencePart> select(const std::set<std::string>& ids) const {
        std::vector<ReferencePart> out;
        for (const auto& p : parts_) {
            if (ids.count(p.id()) != 0) out.push_back(p);
        }
        return out;
    }

    std::vector<ReferencePart> training_parts() const { return select(split_.training_ids); }
    std::vector<ReferencePart> test_parts() const { return select(split_.test_ids); }

private:
    void validate() const {
        std::set<std::string> ids;
        std::set<double> diameters;
        for (const auto& p : parts_) {
            if (!ids.insert(p.id()).second) {
                throw DataError("dataset '" + name_ + "': duplicate part id '" + p.id() + "'");
            }
            if (!diameters.insert(p.true_diameter_mm()).second) {
                throw DataError("dataset '" + name_ + "': duplicate true diameter for part '" + p.id() + "'");
            }
        }
        for (const auto* group : {&split_.training_ids, &split_.test_ids}) {
            for (const auto& id : *group) {
                if (ids.count(id) == 0) {
                    throw DataError("dataset '" + name_ + "': split references unknown part '" + id + "'");
                }
            }
        }
        for (const auto& id : split_.training_ids) {
            if (split_.test_ids.count(id) != 0) {
                throw DataError("dataset '" + name_ + "': part '" + id + "' is both training and test");
            }
        }
        if (split_.training_ids.size() < 2) {
            throw DataError("dataset '" + name_ + "': at least 2 training parts required");
        }
    }

    std::string name_;
    std::vector<ReferencePart> parts_;
    DatasetSplit split_;
};

// =============================================================================
// Part ids
// =============================================================================

/// Canonical id for a diameter, e.g. 24.32 -> "24.32mm", 1.0 -> "1mm".
inline std::string part_id_for(double diameter_mm) { return io::shortest(diameter_mm) + "mm"; }

// =============================================================================
// CSV
// =============================================================================

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace detail

inline MeasurementDataset parse_dataset(std::string_view text, std::string_view source = "<memory>") {
    std::string name;
    std::vector<ReferencePart> parts;
    DatasetSplit split;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    auto fail = [&](const std::string& what) {
        return DataError(std::string(source) + ":" + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        auto line = detail::trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            auto body = detail::trim(line.substr(1));
            if (body.rfind("name=", 0) == 0) {
                name = std::string(detail::trim(body.substr(5)));
            }
            continue;
        }
        auto fields = detail::split_fields(line);
        if (fields.size() < 4) {
            throw fail("expected part_id,true_diameter_mm,role,m1[,m2...]");
        }
        std::string id(detail::trim(fields[0]));
        auto role = detail::trim(fields[2]);
        double diameter = 0.0;
        std::vector<double> pixels;
        try {
            diameter = io::parse_double(fields[1]);
            for (std::size_t i = 3; i < fields.size(); ++i) {
                auto f = detail::trim(fields[i]);
                if (f.empty()) continue;
                pixels.push_back(io::parse_double(f));
            }
            parts.emplace_back(id, diameter, std::move(pixels));
        } catch (const DataError& e) {
            throw fail(e.what());
        }
        if (role == "train") {
            split.training_ids.insert(id);
        } else if (role == "test") {
            split.test_ids.insert(id);
        } else {
            throw fail("role must be 'train' or 'test', got '" + std::string(role) + "'");
        }
    }
    if (name.empty()) {
        throw DataError(std::string(source) + ": missing '# name=' header");
    }
    return MeasurementDataset(std::move(name), std::move(parts), std::move(split));
}

inline MeasurementDataset load_dataset(const std::filesystem::path& path) {
    return parse_dataset(io::read_file(path), path.string());
}

inline std::string format_dataset(const MeasurementDataset& dataset) {
    std::string out = "# name=" + dataset.name() + "\n";
    for (const auto& p : dataset.parts()) {
        const bool train = dataset.split().training_ids.count(p.id()) != 0;
        const bool test = dataset.split().test_ids.count(p.id()) != 0;
        if (!train && !test) continue;
        out += p.id() + "," + io::shortest(p.true_diameter_mm()) + "," + (train ? "train" : "test");
        for (double v : p.pixel_measurements()) {
            out += "," + io::shortest(v);
        }
        out += "\n";
    }
    return out;
}

inline void save_dataset(const MeasurementDataset& dataset, const std::filesystem::path& path) {
    io::write_file_atomic(path, format_dataset(dataset));
}

// =============================================================================
// Embedded reference data
// =============================================================================

inline MeasurementDataset make_embedded_dataset(const appendix::RawTable& table) {
    std::vector<ReferencePart> parts;
    DatasetSplit split;
    for (int c = 0; c < appendix::kParts; ++c) {
        std::vector<double> pixels;
        pixels.reserve(appendix::kCaptures);
        for (int r = 0; r < appendix::kCaptures; ++r) {
            pixels.push_back(table.captures[r][c]);
        }
        const double d = table.diameters_mm[c];
        auto id = part_id_for(d);
        const bool train = std::find(table.train_mm.begin(), table.train_mm.end(), d) != table.train_mm.end();
        (train ? split.training_ids : split.test_ids).insert(id);
        parts.emplace_back(std::move(id), d, std::move(pixels));
    }
    return MeasurementDataset(std::string(table.name), std::move(parts), std::move(split));
}

/// The six embedded reference datasets: glass then metal, each measured by
/// the gradient, radial and counting estimators.
inline std::vector<MeasurementDataset> embedded_datasets() {
    std::vector<MeasurementDataset> out;
    for (const auto& t : appendix::kTables) {
        out.push_back(make_embedded_dataset(t));
    }
    return out;
}

inline MeasurementDataset embedded_dataset(std::string_view name) {
    for (const auto& t : appendix::kTables) {
        if (t.name == name) return make_embedded_dataset(t);
    }
    throw InvalidArgument("no embedded dataset named '" + std::string(name) + "'");
}

/// Estimator role that produced an embedded dataset ("edge-gradient", ...).
inline std::string embedded_estimator(std::string_view name) {
    for (const auto& t : appendix::kTables) {
        if (t.name == name) return std::string(t.estimator);
    }
    return {};
}

/// Resolves "embedded:NAME" or a file path.
inline MeasurementDataset resolve_dataset(std::string_view spec) {
    constexpr std::string_view prefix = "embedded:";
    if (spec.rfind(prefix, 0) == 0) {
        return embedded_dataset(spec.substr(prefix.size()));
    }
    return load_dataset(std::filesystem::path(std::string(spec)));
}

}  // namespace gaugecal
