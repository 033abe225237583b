/**
 * @file report.hpp
 * @brief CSV and markdown renderings of evaluation results
 *
 * Output is a pure function of the input: percentages carry 4 decimals,
 * micrometers 2, µm/px 3.
 */

#pragma once

#include <gaugecal/evaluation.hpp>
#include <gaugecal/io.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace gaugecal {

enum class ReportFormat { Csv, Markdown };

inline ReportFormat parse_report_format(std::string_view s) {
    if (s == "csv") return ReportFormat::Csv;
    if (s == "markdown" || s == "md") return ReportFormat::Markdown;
    throw InvalidArgument("unknown report format '" + std::string(s) + "'");
}

inline std::string report_extension(ReportFormat f) { return f == ReportFormat::Csv ? ".csv" : ".md"; }

namespace detail {

inline std::string diameter_text(double mm) { return io::shortest(mm); }

}  // namespace detail

// =============================================================================
// Evaluation tables
// =============================================================================

inline std::string render_evaluation(const EvaluationTable& t, ReportFormat format) {
    std::string out;
    if (format == ReportFormat::Csv) {
        out = "dataset,estimator,method,diameter_mm,estimated_mm,r_um_per_px,abs_error_um,pct_error\n";
        for (const auto& r : t.rows) {
            out += t.dataset + "," + t.estimator + "," + method_label(r.method) + "," +
                   detail::diameter_text(r.true_mm) + "," + io::fixed(r.estimated_mm, 6) + "," +
                   (r.mm_per_px ? io::fixed(to_um_per_px(*r.mm_per_px), 3) : std::string()) + "," +
                   io::fixed(r.abs_error_um, 2) + "," + io::fixed(r.pct_error, 4) + "\n";
        }
        for (std::size_t i = 0; i < t.methods.size(); ++i) {
            out += t.dataset + "," + t.estimator + "," + method_label(t.methods[i]) + ",MAPE,,,," +
                   io::fixed(t.mape[i], 4) + "\n";
        }
        return out;
    }

    out = "### " + t.dataset + (t.estimator.empty() ? "" : " (" + t.estimator + ")") + "\n\n";
    out += "Absolute percentage error (%)\n\n";
    out += "| Diameter [mm] |";
    std::string rule = "|---:|";
    for (const auto& m : t.methods) {
        out += " " + method_label(m) + " |";
        rule += "---:|";
    }
    out += "\n" + rule + "\n";
    if (t.methods.empty()) return out;
    for (double d : t.test_diameters_mm) {
        out += "| " + detail::diameter_text(d) + " |";
        for (const auto& m : t.methods) {
            const auto* r = t.find(m, d);
            out += " " + (r ? io::fixed(r->pct_error, 4) : std::string("-")) + " |";
        }
        out += "\n";
    }
    out += "| MAPE |";
    for (double v : t.mape) out += " " + io::fixed(v, 4) + " |";
    out += "\n";
    return out;
}

// =============================================================================
// Absolute errors
// =============================================================================

inline std::string render_absolute_errors(const AbsoluteErrorTable& t, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::string out = "dataset,estimator,method,diameter_mm,abs_error_um\n";
        for (const auto& r : t) {
            out += r.dataset + "," + r.estimator + "," + method_label(r.method) + "," +
                   detail::diameter_text(r.diameter_mm) + "," + io::fixed(r.abs_error_um, 2) + "\n";
        }
        return out;
    }
    // One markdown row per (dataset, method), one column per test diameter.
    std::string out = "| Dataset | Method | Absolute error [µm] per test diameter [mm] |\n|---|---|---|\n";
    std::size_t i = 0;
    while (i < t.size()) {
        std::size_t j = i;
        std::string cells;
        while (j < t.size() && t[j].dataset == t[i].dataset && t[j].method == t[i].method) {
            if (!cells.empty()) cells += ", ";
            cells += detail::diameter_text(t[j].diameter_mm) + ": " + io::fixed(t[j].abs_error_um, 2);
            ++j;
        }
        out += "| " + t[i].dataset + " | " + method_label(t[i].method) + " | " + cells + " |\n";
        i = j;
    }
    return out;
}

// =============================================================================
// Comparisons and sweeps
// =============================================================================

inline std::string render_comparison(const ComparisonResult& c, ReportFormat format) {
    auto decimals = [](published::CellKind k) { return k == published::CellKind::AbsoluteMicrons ? 2 : 4; };
    auto where = [](const CellComparison& cell) {
        return cell.kind == published::CellKind::Mape ? std::string("MAPE") : detail::diameter_text(cell.diameter_mm);
    };
    std::string out;
    if (format == ReportFormat::Csv) {
        out = "dataset,method,diameter_mm,kind,computed,published,delta,tolerance,status\n";
        for (const auto& cell : c.cells) {
            const int n = decimals(cell.kind);
            out += cell.dataset + "," + cell.method + "," + where(cell) + "," +
                   std::string(published::kind_name(cell.kind)) + "," + io::fixed(cell.computed, n) + "," +
                   io::fixed(cell.published, n) + "," + io::fixed(cell.delta, n) + "," +
                   io::fixed(cell.tolerance, n) + "," + (cell.pass ? "pass" : "FAIL") + "\n";
        }
        return out;
    }
    out = "| Dataset | Method | Diameter [mm] | Kind | Computed | Published | Delta | Tolerance | Status |\n"
          "|---|---|---:|---|---:|---:|---:|---:|---|\n";
    for (const auto& cell : c.cells) {
        const int n = decimals(cell.kind);
        out += "| " + cell.dataset + " | " + cell.method + " | " + where(cell) + " | " +
               std::string(published::kind_name(cell.kind)) + " | " + io::fixed(cell.computed, n) + " | " +
               io::fixed(cell.published, n) + " | " + io::fixed(cell.delta, n) + " | " +
               io::fixed(cell.tolerance, n) + " | " + (cell.pass ? "pass" : "**FAIL**") + " |\n";
    }
    out += "\n" + std::to_string(c.cells.size() - c.failures()) + "/" + std::to_string(c.cells.size()) +
           " cells within tolerance\n";
    return out;
}

inline std::string render_sweep(std::string_view dataset, std::span<const ErrorRecord> rows, ReportFormat format) {
    std::string out;
    if (format == ReportFormat::Csv) {
        out = "dataset,diameter_mm,estimated_mm,abs_error_um,pct_error\n";
        for (const auto& r : rows) {
            out += std::string(dataset) + "," + detail::diameter_text(r.true_mm) + "," + io::fixed(r.estimated_mm, 6) +
                   "," + io::fixed(r.abs_error_um, 2) + "," + io::fixed(r.pct_error, 4) + "\n";
        }
        return out;
    }
    out = "| Diameter [mm] | Estimated [mm] | Error [µm] | Error [%] |\n|---:|---:|---:|---:|\n";
    for (const auto& r : rows) {
        out += "| " + detail::diameter_text(r.true_mm) + " | " + io::fixed(r.estimated_mm, 6) + " | " +
               io::fixed(r.abs_error_um, 2) + " | " + io::fixed(r.pct_error, 4) + " |\n";
    }
    return out;
}

inline void emit_report(const EvaluationTable& table, ReportFormat format, const std::filesystem::path& path) {
    io::write_file_atomic(path, render_evaluation(table, format));
}

}  // namespace gaugecal
