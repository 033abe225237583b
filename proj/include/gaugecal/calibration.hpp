/**
 * @file calibration.hpp
 * @brief Pixel-to-millimeter conversion from one or several reference parts
 *
 * Every reference contributes a pixel diameter P, a true diameter D and the
 * conversion factor R = D / P (mm/px). Six estimators map a query pixel
 * diameter to millimeters:
 *
 *   Base(i)  R of reference i
 *   M0       mean R over all references
 *   M1       R of the reference nearest in pixels
 *   M2       R linearly interpolated between the two bracketing references
 *   M3       D linearly interpolated between the two bracketing references
 *   M4       least-squares line D = m P + b through all references
 *
 * M0-M2 go through a conversion factor; M3 and M4 map pixels straight to
 * millimeters and report no R. Outside the reference range M2/M3 use the
 * two outermost references, so every estimator extrapolates linearly.
 */

#pragma once

#include <gaugecal/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gaugecal {

// =============================================================================
// Conversion factor and error
// =============================================================================

/// R = D / P in mm/px.
inline double conversion_factor(double diameter_mm, double pixels) {
    if (!(diameter_mm > 0.0) || !(pixels > 0.0)) {
        throw InvalidArgument("conversion_factor: diameter and pixel length must be > 0");
    }
    return diameter_mm / pixels;
}

/// |D_q - D_est| in mm.
inline double absolute_error(double true_mm, double estimated_mm) { return std::abs(true_mm - estimated_mm); }

/// mm/px to the µm/px figure used in reports.
inline double to_um_per_px(double mm_per_px) { return mm_per_px * 1000.0; }

// =============================================================================
// CalibrationTable
// =============================================================================

struct CalibrationEntry {
    double pixels = 0.0;
    double millimeters = 0.0;
    double mm_per_px = 0.0;
};

/// References sorted by ascending pixel diameter.
class CalibrationTable {
public:
    CalibrationTable() = default;

    /// Builds from (pixels, millimeters) pairs in any order.
    explicit CalibrationTable(std::vector<std::pair<double, double>> references) {
        if (references.empty()) {
            throw InvalidArgument("calibration table needs at least one reference");
        }
        std::sort(references.begin(), references.end());
        entries_.reserve(references.size());
        for (const auto& [p, d] : references) {
            if (!(p > 0.0) || !(d > 0.0) || !std::isfinite(p) || !std::isfinite(d)) {
                throw InvalidArgument("calibration references need P > 0 and D > 0");
            }
            if (!entries_.empty() && entries_.back().pixels == p) {
                throw InvalidArgument("duplicate pixel value in calibration table");
            }
            entries_.push_back({p, d, d / p});
        }
    }

    std::span<const CalibrationEntry> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const CalibrationEntry& operator[](std::size_t i) const { return entries_.at(i); }

    /// Index of the reference nearest to `pixels`; ties go to the smaller P.
    std::size_t nearest(double pixels) const {
        require_nonempty();
        std::size_t best = 0;
        for (std::size_t i = 1; i < entries_.size(); ++i) {
            if (std::abs(pixels - entries_[i].pixels) < std::abs(pixels - entries_[best].pixels)) {
                best = i;
            }
        }
        return best;
    }

    /// Lower index k of the pair (k, k+1) used for interpolation: the
    /// bracketing pair inside the range, the outermost pair outside it.
    std::size_t bracket(double pixels) const {
        if (entries_.size() < 2) {
            throw InvalidArgument("interpolation needs at least 2 references");
        }
        auto it = std::upper_bound(entries_.begin(), entries_.end(), pixels,
                                   [](double p, const CalibrationEntry& e) { return p < e.pixels; });
        auto k = static_cast<std::size_t>(std::distance(entries_.begin(), it));
        k = (k == 0) ? 0 : k - 1;
        return std::min(k, entries_.size() - 2);
    }

    void require_nonempty() const {
        if (entries_.empty()) {
            throw InvalidArgument("calibration table is empty");
        }
    }

    friend bool operator==(const CalibrationTable& a, const CalibrationTable& b) {
        return std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                          [](const CalibrationEntry& x, const CalibrationEntry& y) {
                              return x.pixels == y.pixels && x.millimeters == y.millimeters;
                          });
    }

private:
    std::vector<CalibrationEntry> entries_;
};

// =============================================================================
// Methods
// =============================================================================

enum class MethodKind { Base, M0, M1, M2, M3, M4 };

struct Method {
    MethodKind kind = MethodKind::M0;
    std::size_t base_index = 0;  ///< only meaningful for Base

    static Method base(std::size_t index) { return {MethodKind::Base, index}; }
    static constexpr Method m(MethodKind k) { return {k, 0}; }

    /// True for the estimators that report an R_est.
    bool is_r_based() const noexcept { return kind != MethodKind::M3 && kind != MethodKind::M4; }
    std::size_t min_references() const noexcept {
        return (kind == MethodKind::M2 || kind == MethodKind::M3 || kind == MethodKind::M4) ? 2 : 1;
    }

    friend bool operator==(const Method& a, const Method& b) {
        return a.kind == b.kind && (a.kind != MethodKind::Base || a.base_index == b.base_index);
    }
};

inline constexpr Method kM0 = Method::m(MethodKind::M0);
inline constexpr Method kM1 = Method::m(MethodKind::M1);
inline constexpr Method kM2 = Method::m(MethodKind::M2);
inline constexpr Method kM3 = Method::m(MethodKind::M3);
inline constexpr Method kM4 = Method::m(MethodKind::M4);
inline constexpr Method kAllMethods[] = {kM0, kM1, kM2, kM3, kM4};

/// "m0".."m4" or "base:<index>".
inline std::string method_tag(const Method& m) {
    switch (m.kind) {
        case MethodKind::Base: return "base:" + std::to_string(m.base_index);
        case MethodKind::M0: return "m0";
        case MethodKind::M1: return "m1";
        case MethodKind::M2: return "m2";
        case MethodKind::M3: return "m3";
        case MethodKind::M4: return "m4";
    }
    return "?";
}

/// Display label used in report headers ("M0".."M4", "Base").
inline std::string method_label(const Method& m) {
    if (m.kind == MethodKind::Base) return "Base";
    auto tag = method_tag(m);
    tag[0] = 'M';
    return tag;
}

inline Method parse_method(std::string_view tag) {
    if (tag == "m0" || tag == "M0") return kM0;
    if (tag == "m1" || tag == "M1") return kM1;
    if (tag == "m2" || tag == "M2") return kM2;
    if (tag == "m3" || tag == "M3") return kM3;
    if (tag == "m4" || tag == "M4") return kM4;
    constexpr std::string_view prefix = "base:";
    if (tag.rfind(prefix, 0) == 0) {
        auto rest = tag.substr(prefix.size());
        std::size_t index = 0;
        if (rest.empty()) throw InvalidArgument("base method needs an index");
        for (char c : rest) {
            if (c < '0' || c > '9') throw InvalidArgument("bad base index '" + std::string(rest) + "'");
            index = index * 10 + static_cast<std::size_t>(c - '0');
        }
        return Method::base(index);
    }
    throw InvalidArgument("unknown method '" + std::string(tag) + "'");
}

// =============================================================================
// Estimates
// =============================================================================

struct QueryResult {
    double query_pixels = 0.0;
    double estimated_mm = 0.0;
    std::optional<double> mm_per_px;  ///< absent for M3/M4
};

inline void require_query(double pixels) {
    if (!(pixels > 0.0) || !std::isfinite(pixels)) {
        throw InvalidArgument("query pixel length must be > 0");
    }
}

/// Single reference: D_est = (D_i / P_i) P_q.
inline QueryResult estimate_base(const CalibrationTable& table, std::size_t ref_index, double query_pixels) {
    require_query(query_pixels);
    if (ref_index >= table.size()) {
        throw InvalidArgument("reference index " + std::to_string(ref_index) + " out of range");
    }
    const auto& e = table[ref_index];
    return {query_pixels, e.millimeters * (query_pixels / e.pixels), e.mm_per_px};
}

inline QueryResult estimate_m0(const CalibrationTable& table, double query_pixels) {
    require_query(query_pixels);
    table.require_nonempty();
    double sum = 0.0;
    for (const auto& e : table.entries()) sum += e.mm_per_px;
    const double r = sum / static_cast<double>(table.size());
    return {query_pixels, query_pixels * r, r};
}

inline QueryResult estimate_m1(const CalibrationTable& table, double query_pixels) {
    require_query(query_pixels);
    const auto& e = table[table.nearest(query_pixels)];
    return {query_pixels, e.millimeters * (query_pixels / e.pixels), e.mm_per_px};
}

inline QueryResult estimate_m2(const CalibrationTable& table, double query_pixels) {
    require_query(query_pixels);
    const auto k = table.bracket(query_pixels);
    const auto& lo = table[k];
    const auto& hi = table[k + 1];
    for (const auto* e : {&lo, &hi}) {
        if (e->pixels == query_pixels) return {query_pixels, e->millimeters, e->mm_per_px};
    }
    const double r = (lo.mm_per_px * (hi.pixels - query_pixels) + hi.mm_per_px * (query_pixels - lo.pixels)) /
                     (hi.pixels - lo.pixels);
    return {query_pixels, r * query_pixels, r};
}

inline QueryResult estimate_m3(const CalibrationTable& table, double query_pixels) {
    require_query(query_pixels);
    const auto k = table.bracket(query_pixels);
    const auto& lo = table[k];
    const auto& hi = table[k + 1];
    for (const auto* e : {&lo, &hi}) {
        if (e->pixels == query_pixels) return {query_pixels, e->millimeters, std::nullopt};
    }
    const double d = (lo.millimeters * (hi.pixels - query_pixels) + hi.millimeters * (query_pixels - lo.pixels)) /
                     (hi.pixels - lo.pixels);
    return {query_pixels, d, std::nullopt};
}

// =============================================================================
// CalibrationModel
// =============================================================================

/// A method bound to its reference table; M4 additionally carries its line.
class CalibrationModel {
public:
    CalibrationModel(Method method, CalibrationTable table) : method_(method), table_(std::move(table)) {
        if (table_.size() < method_.min_references()) {
            throw InvalidArgument(method_tag(method_) + " needs at least " +
                                  std::to_string(method_.min_references()) + " references");
        }
        if (method_.kind == MethodKind::Base && method_.base_index >= table_.size()) {
            throw InvalidArgument("reference index " + std::to_string(method_.base_index) + " out of range");
        }
        if (method_.kind == MethodKind::M4) {
            fit_line();
        }
    }

    /// Restores a serialized M4 model with its stored coefficients.
    CalibrationModel(CalibrationTable table, double slope, double intercept)
        : method_(kM4), table_(std::move(table)), slope_(slope), intercept_(intercept) {
        if (table_.size() < 2) throw InvalidArgument("m4 needs at least 2 references");
    }

    const Method& method() const noexcept { return method_; }
    const CalibrationTable& table() const noexcept { return table_; }
    /// mm/px; set only for M4.
    std::optional<double> slope() const noexcept { return slope_; }
    /// mm; set only for M4.
    std::optional<double> intercept() const noexcept { return intercept_; }

    QueryResult estimate(double query_pixels) const {
        switch (method_.kind) {
            case MethodKind::Base: return estimate_base(table_, method_.base_index, query_pixels);
            case MethodKind::M0: return estimate_m0(table_, query_pixels);
            case MethodKind::M1: return estimate_m1(table_, query_pixels);
            case MethodKind::M2: return estimate_m2(table_, query_pixels);
            case MethodKind::M3: return estimate_m3(table_, query_pixels);
            case MethodKind::M4:
                require_query(query_pixels);
                return {query_pixels, *slope_ * query_pixels + *intercept_, std::nullopt};
        }
        throw InvalidArgument("unknown method");
    }

    friend bool operator==(const CalibrationModel& a, const CalibrationModel& b) {
        return a.method_ == b.method_ && a.table_ == b.table_ && a.slope_ == b.slope_ &&
               a.intercept_ == b.intercept_;
    }

private:
    void fit_line() {
        const auto entries = table_.entries();
        const auto n = static_cast<double>(entries.size());
        double mean_p = 0.0;
        double mean_d = 0.0;
        for (const auto& e : entries) {
            mean_p += e.pixels;
            mean_d += e.millimeters;
        }
        mean_p /= n;
        mean_d /= n;
        double num = 0.0;
        double den = 0.0;
        for (const auto& e : entries) {
            num += (e.pixels - mean_p) * (e.millimeters - mean_d);
            den += (e.pixels - mean_p) * (e.pixels - mean_p);
        }
        if (den == 0.0) {
            throw InvalidArgument("m4 fit: all pixel values identical");
        }
        slope_ = num / den;
        intercept_ = mean_d - *slope_ * mean_p;
    }

    Method method_;
    CalibrationTable table_;
    std::optional<double> slope_;
    std::optional<double> intercept_;
};

/// Least-squares line through the references.
inline CalibrationModel estimate_m4_fit(const CalibrationTable& table) { return CalibrationModel(kM4, table); }

inline QueryResult estimate_m4(const CalibrationModel& model, double query_pixels) {
    if (model.method().kind != MethodKind::M4) {
        throw InvalidArgument("estimate_m4 needs a model fitted by estimate_m4_fit");
    }
    return model.estimate(query_pixels);
}

}  // namespace gaugecal
