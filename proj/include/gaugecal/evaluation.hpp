/**
 * @file evaluation.hpp
 * @brief Error metrics over a dataset's test split and comparison against
 *        published figures
 */

#pragma once

#include <gaugecal/calibration.hpp>
#include <gaugecal/dataset.hpp>
#include <gaugecal/published.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gaugecal {

// =============================================================================
// Records and tables
// =============================================================================

struct ErrorRecord {
    std::string part_id;
    double true_mm = 0.0;
    Method method;
    double estimated_mm = 0.0;
    std::optional<double> mm_per_px;
    double abs_error_um = 0.0;
    double pct_error = 0.0;
};

inline ErrorRecord make_record(const ReferencePart& part, const Method& method, const QueryResult& q) {
    ErrorRecord r;
    r.part_id = part.id();
    r.true_mm = part.true_diameter_mm();
    r.method = method;
    r.estimated_mm = q.estimated_mm;
    r.mm_per_px = q.mm_per_px;
    r.abs_error_um = absolute_error(r.true_mm, r.estimated_mm) * 1000.0;
    r.pct_error = r.abs_error_um / (r.true_mm * 1000.0) * 100.0;
    return r;
}

/// Mean of the given percentages; 0 for an empty list.
inline double mean_absolute_percentage_error(std::span<const double> pct_errors) {
    if (pct_errors.empty()) return 0.0;
    double sum = 0.0;
    for (double v : pct_errors) sum += v;
    return sum / static_cast<double>(pct_errors.size());
}

struct EvaluationTable {
    std::string dataset;
    std::string estimator;
    std::vector<Method> methods;
    std::vector<double> test_diameters_mm;  ///< ascending
    std::vector<ErrorRecord> rows;          ///< grouped by method, then diameter
    std::vector<double> mape;               ///< parallel to methods

    const ErrorRecord* find(const Method& method, double diameter_mm) const {
        for (const auto& r : rows) {
            if (r.method == method && r.true_mm == diameter_mm) return &r;
        }
        return nullptr;
    }

    std::optional<double> mape_of(const Method& method) const {
        for (std::size_t i = 0; i < methods.size(); ++i) {
            if (methods[i] == method) return mape[i];
        }
        return std::nullopt;
    }

    std::vector<ErrorRecord> records_of(const Method& method) const {
        std::vector<ErrorRecord> out;
        for (const auto& r : rows) {
            if (r.method == method) out.push_back(r);
        }
        return out;
    }
};

/// Calibration table built from the training parts' mean pixel diameters.
inline CalibrationTable training_table(const MeasurementDataset& dataset) {
    std::vector<std::pair<double, double>> refs;
    for (const auto& p : dataset.training_parts()) {
        refs.emplace_back(p.mean_pixels(), p.true_diameter_mm());
    }
    return CalibrationTable(std::move(refs));
}

inline std::vector<ReferencePart> sorted_by_diameter(std::vector<ReferencePart> parts) {
    std::sort(parts.begin(), parts.end(), [](const ReferencePart& a, const ReferencePart& b) {
        return a.true_diameter_mm() < b.true_diameter_mm();
    });
    return parts;
}

/// Fits every method on the training split and scores it on the test split.
inline EvaluationTable evaluate(const MeasurementDataset& dataset, std::span<const Method> methods,
                                std::string estimator = {}) {
    EvaluationTable table;
    table.dataset = dataset.name();
    table.estimator = estimator.empty() ? embedded_estimator(dataset.name()) : std::move(estimator);
    table.methods.assign(methods.begin(), methods.end());

    const auto refs = training_table(dataset);
    const auto tests = sorted_by_diameter(dataset.test_parts());
    for (const auto& p : tests) table.test_diameters_mm.push_back(p.true_diameter_mm());

    for (const auto& method : methods) {
        const CalibrationModel model(method, refs);
        std::vector<double> pct;
        for (const auto& part : tests) {
            auto rec = make_record(part, method, model.estimate(part.mean_pixels()));
            pct.push_back(rec.pct_error);
            table.rows.push_back(std::move(rec));
        }
        table.mape.push_back(mean_absolute_percentage_error(pct));
    }
    return table;
}

inline EvaluationTable evaluate(const MeasurementDataset& dataset) { return evaluate(dataset, kAllMethods); }

/// Converts every part with the single reference `ref_id`, sorted by
/// diameter. The reference itself comes out with zero error.
inline std::vector<ErrorRecord> single_r_sweep(const MeasurementDataset& dataset, std::string_view ref_id) {
    if (!dataset.contains(ref_id)) {
        throw InvalidArgument("dataset '" + dataset.name() + "' has no part '" + std::string(ref_id) + "'");
    }
    const auto& ref = dataset.part(ref_id);
    const CalibrationTable table({{ref.mean_pixels(), ref.true_diameter_mm()}});
    std::vector<ErrorRecord> out;
    for (const auto& part : sorted_by_diameter(dataset.parts())) {
        out.push_back(make_record(part, Method::base(0), estimate_base(table, 0, part.mean_pixels())));
    }
    return out;
}

// =============================================================================
// Absolute errors (M0 vs M4 across datasets)
// =============================================================================

struct AbsoluteErrorRow {
    std::string dataset;
    std::string estimator;
    Method method;
    double diameter_mm = 0.0;
    double abs_error_um = 0.0;
};

using AbsoluteErrorTable = std::vector<AbsoluteErrorRow>;

/// M0 and M4 absolute errors in µm for every test part of every dataset.
inline AbsoluteErrorTable absolute_error_table(std::span<const MeasurementDataset> datasets) {
    AbsoluteErrorTable out;
    constexpr Method methods[] = {kM0, kM4};
    for (const auto& ds : datasets) {
        const auto table = evaluate(ds, methods);
        for (const auto& r : table.rows) {
            out.push_back({table.dataset, table.estimator, r.method, r.true_mm, r.abs_error_um});
        }
    }
    return out;
}

// =============================================================================
// Comparison against published figures
// =============================================================================

/// Allowed |computed - published| per cell class.
struct ToleranceSchedule {
    double glass_pct = 0.02;
    double metal_pct = 0.03;
    double metal_m0_pct = 0.05;
    double glass_abs_um = 0.5;
    double metal_m4_abs_um = 1.0;
    double metal_m0_abs_um = 2.0;

    double tolerance(std::string_view dataset, std::string_view method, published::CellKind kind) const {
        const bool metal = dataset.rfind("metal", 0) == 0;
        const bool m0 = method == "M0";
        if (kind == published::CellKind::AbsoluteMicrons) {
            if (!metal) return glass_abs_um;
            return m0 ? metal_m0_abs_um : metal_m4_abs_um;
        }
        if (!metal) return glass_pct;
        return m0 ? metal_m0_pct : metal_pct;
    }
};

struct CellComparison {
    std::string dataset;
    std::string method;
    double diameter_mm = 0.0;  ///< 0 for a MAPE cell
    published::CellKind kind = published::CellKind::Percent;
    double computed = 0.0;
    double published = 0.0;
    double delta = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ComparisonResult {
    std::vector<CellComparison> cells;

    bool all_pass() const {
        return std::all_of(cells.begin(), cells.end(), [](const CellComparison& c) { return c.pass; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(cells.begin(), cells.end(), [](const CellComparison& c) { return !c.pass; }));
    }
    double max_abs_delta() const {
        double m = 0.0;
        for (const auto& c : cells) m = std::max(m, std::abs(c.delta));
        return m;
    }
    void append(const ComparisonResult& other) { cells.insert(cells.end(), other.cells.begin(), other.cells.end()); }
};

class ShapeMismatch : public DataError {
public:
    using DataError::DataError;
};

namespace detail {

inline bool same_diameter(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

inline CellComparison make_cell(const published::Cell& p, double computed, const ToleranceSchedule& tol) {
    CellComparison c;
    c.dataset = std::string(p.dataset);
    c.method = std::string(p.method);
    c.diameter_mm = p.diameter_mm;
    c.kind = p.kind;
    c.computed = computed;
    c.published = p.value;
    c.delta = computed - p.value;
    c.tolerance = tol.tolerance(p.dataset, p.method, p.kind);
    c.pass = std::abs(c.delta) <= c.tolerance;
    return c;
}

}  // namespace detail

/// Cell-by-cell comparison of percentage errors and MAPE values. Cells are
/// matched by (method, diameter), never by position; every method in the
/// table must have exactly the published diameters.
inline ComparisonResult compare_to_published(const EvaluationTable& table,
                                             std::span<const published::Cell> cells = published::kCells,
                                             const ToleranceSchedule& tol = {}) {
    ComparisonResult result;
    for (const auto& method : table.methods) {
        const auto label = method_label(method);
        std::size_t matched_rows = 0;
        bool have_mape = false;
        for (const auto& p : cells) {
            if (p.dataset != table.dataset || p.method != label) continue;
            if (p.kind == published::CellKind::Mape) {
                result.cells.push_back(detail::make_cell(p, *table.mape_of(method), tol));
                have_mape = true;
            } else if (p.kind == published::CellKind::Percent) {
                const ErrorRecord* rec = nullptr;
                for (const auto& r : table.rows) {
                    if (r.method == method && detail::same_diameter(r.true_mm, p.diameter_mm)) rec = &r;
                }
                if (rec == nullptr) {
                    throw ShapeMismatch(table.dataset + ": no computed " + label + " cell for " +
                                        io::shortest(p.diameter_mm) + " mm");
                }
                result.cells.push_back(detail::make_cell(p, rec->pct_error, tol));
                ++matched_rows;
            }
        }
        if (matched_rows != table.records_of(method).size() || !have_mape) {
            throw ShapeMismatch(table.dataset + ": " + label + " rows do not match the published grid");
        }
    }
    return result;
}

/// Same as compare_to_published, for the M0/M4 absolute-error grid.
inline ComparisonResult compare_absolute_errors(const AbsoluteErrorTable& table,
                                                std::span<const published::Cell> cells = published::kCells,
                                                const ToleranceSchedule& tol = {}) {
    ComparisonResult result;
    std::size_t published_count = 0;
    for (const auto& p : cells) {
        if (p.kind != published::CellKind::AbsoluteMicrons) continue;
        ++published_count;
        const AbsoluteErrorRow* row = nullptr;
        for (const auto& r : table) {
            if (r.dataset == p.dataset && method_label(r.method) == p.method &&
                detail::same_diameter(r.diameter_mm, p.diameter_mm)) {
                row = &r;
            }
        }
        if (row == nullptr) {
            throw ShapeMismatch(std::string(p.dataset) + ": no computed " + std::string(p.method) +
                                " absolute error for " + io::shortest(p.diameter_mm) + " mm");
        }
        result.cells.push_back(detail::make_cell(p, row->abs_error_um, tol));
    }
    if (published_count != table.size()) {
        throw ShapeMismatch("absolute-error table has " + std::to_string(table.size()) + " rows, published grid has " +
                            std::to_string(published_count));
    }
    return result;
}

}  // namespace gaugecal
