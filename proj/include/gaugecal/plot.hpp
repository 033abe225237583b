/**
 * @file plot.hpp
 * @brief Static SVG charts plus the CSV data behind them
 *
 * Three chart kinds:
 *   r_vs_diameter      conversion factor (µm/px) against true diameter
 *   error_vs_diameter  single-reference absolute error (µm) against diameter
 *   mape_bars          MAPE per method, one bar group per dataset
 */

#pragma once

#include <gaugecal/evaluation.hpp>
#include <gaugecal/io.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace gaugecal {

enum class PlotKind { RVsDiameter, ErrorVsDiameter, MapeBars };

inline PlotKind parse_plot_kind(std::string_view s) {
    if (s == "r_vs_diameter") return PlotKind::RVsDiameter;
    if (s == "error_vs_diameter") return PlotKind::ErrorVsDiameter;
    if (s == "mape_bars") return PlotKind::MapeBars;
    throw InvalidArgument("unknown plot kind '" + std::string(s) + "'");
}

inline std::string plot_kind_name(PlotKind k) {
    switch (k) {
        case PlotKind::RVsDiameter: return "r_vs_diameter";
        case PlotKind::ErrorVsDiameter: return "error_vs_diameter";
        case PlotKind::MapeBars: return "mape_bars";
    }
    return "?";
}

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Series {
    std::string name;
    std::vector<Point> points;
};

struct BarGroup {
    std::string name;
    std::vector<double> values;  ///< one per category
};

struct PlotOutput {
    std::string svg;
    std::string csv;
};

namespace svg {

inline constexpr double kWidth = 760.0;
inline constexpr double kHeight = 480.0;
inline constexpr double kLeft = 70.0;
inline constexpr double kRight = 190.0;
inline constexpr double kTop = 40.0;
inline constexpr double kBottom = 60.0;

inline constexpr std::array<std::string_view, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                             "#9467bd", "#8c564b", "#e377c2", "#17becf"};

inline std::string num(double v) { return io::fixed(v, 2); }

inline std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

/// Tick step from {1, 2, 5} x 10^k giving roughly `target` intervals.
inline double nice_step(double span, int target = 5) {
    if (!(span > 0.0)) return 1.0;
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) return m * mag;
    }
    return 10.0 * mag;
}

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    double step = 1.0;

    static Axis fit(double lo, double hi) {
        if (!(hi > lo)) {
            const double pad = (lo == 0.0) ? 1.0 : std::abs(lo) * 0.05;
            lo -= pad;
            hi += pad;
        }
        Axis a;
        a.step = nice_step(hi - lo);
        a.lo = std::floor(lo / a.step) * a.step;
        a.hi = std::ceil(hi / a.step) * a.step;
        return a;
    }
};

inline std::string header(std::string_view title) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n" +
           "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + "<text x=\"" + num(kWidth / 2) +
           "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" + escape(title) + "</text>\n";
}

inline std::string axes(const Axis& x, const Axis& y, std::string_view xlabel, std::string_view ylabel,
                        bool x_ticks = true) {
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    std::string out = "<g stroke=\"black\" fill=\"none\">\n<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" +
                      num(x1) + "\" y2=\"" + num(y0) + "\"/>\n<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) +
                      "\" x2=\"" + num(x0) + "\" y2=\"" + num(y1) + "\"/>\n</g>\n";
    auto sx = [&](double v) { return x0 + (v - x.lo) / (x.hi - x.lo) * (x1 - x0); };
    auto sy = [&](double v) { return y0 - (v - y.lo) / (y.hi - y.lo) * (y0 - y1); };
    auto label = [](double v, double step) { return io::fixed(v, step >= 1.0 ? 0 : static_cast<int>(std::ceil(-std::log10(step)))); };
    if (x_ticks) {
        for (double v = x.lo; v <= x.hi + x.step * 1e-9; v += x.step) {
            out += "<line x1=\"" + num(sx(v)) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(sx(v)) + "\" y2=\"" +
                   num(y0 + 5) + "\" stroke=\"black\"/>\n<text x=\"" + num(sx(v)) + "\" y=\"" + num(y0 + 18) +
                   "\" text-anchor=\"middle\">" + label(v, x.step) + "</text>\n";
        }
    }
    for (double v = y.lo; v <= y.hi + y.step * 1e-9; v += y.step) {
        out += "<line x1=\"" + num(x0 - 5) + "\" y1=\"" + num(sy(v)) + "\" x2=\"" + num(x0) + "\" y2=\"" +
               num(sy(v)) + "\" stroke=\"black\"/>\n<text x=\"" + num(x0 - 8) + "\" y=\"" + num(sy(v) + 4) +
               "\" text-anchor=\"end\">" + label(v, y.step) + "</text>\n";
    }
    out += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kHeight - 15) + "\" text-anchor=\"middle\">" +
           escape(xlabel) + "</text>\n";
    out += "<text transform=\"translate(18," + num((y0 + y1) / 2) + ") rotate(-90)\" text-anchor=\"middle\">" +
           escape(ylabel) + "</text>\n";
    return out;
}

inline std::string legend(const std::vector<std::string>& names) {
    std::string out;
    const double x = kWidth - kRight + 15;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const double y = kTop + 10 + 18.0 * static_cast<double>(i);
        out += "<rect x=\"" + num(x) + "\" y=\"" + num(y - 9) + "\" width=\"12\" height=\"12\" fill=\"" +
               std::string(kPalette[i % kPalette.size()]) + "\"/>\n<text x=\"" + num(x + 18) + "\" y=\"" +
               num(y + 1) + "\">" + escape(names[i]) + "</text>\n";
    }
    return out;
}

}  // namespace svg

/// Line chart with one polyline and marker set per series. A series with a
/// single point renders as a lone marker.
inline std::string render_line_svg(std::string_view title, std::string_view xlabel, std::string_view ylabel,
                                   const std::vector<Series>& series) {
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo, ylo = xlo, yhi = -xlo;
    for (const auto& s : series) {
        for (const auto& p : s.points) {
            xlo = std::min(xlo, p.x);
            xhi = std::max(xhi, p.x);
            ylo = std::min(ylo, p.y);
            yhi = std::max(yhi, p.y);
        }
    }
    if (!std::isfinite(xlo)) {
        throw InvalidArgument("plot has no data points");
    }
    const auto xa = svg::Axis::fit(xlo, xhi);
    const auto ya = svg::Axis::fit(ylo, yhi);
    const double x0 = svg::kLeft, x1 = svg::kWidth - svg::kRight, y0 = svg::kHeight - svg::kBottom, y1 = svg::kTop;
    auto sx = [&](double v) { return x0 + (v - xa.lo) / (xa.hi - xa.lo) * (x1 - x0); };
    auto sy = [&](double v) { return y0 - (v - ya.lo) / (ya.hi - ya.lo) * (y0 - y1); };

    std::string out = svg::header(title) + svg::axes(xa, ya, xlabel, ylabel);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto color = std::string(svg::kPalette[i % svg::kPalette.size()]);
        const auto& pts = series[i].points;
        names.push_back(series[i].name);
        out += "<g class=\"series\" data-name=\"" + svg::escape(series[i].name) + "\">\n";
        if (pts.size() > 1) {
            out += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t k = 0; k < pts.size(); ++k) {
                out += (k ? " " : "") + svg::num(sx(pts[k].x)) + "," + svg::num(sy(pts[k].y));
            }
            out += "\"/>\n";
        }
        for (const auto& p : pts) {
            out += "<circle cx=\"" + svg::num(sx(p.x)) + "\" cy=\"" + svg::num(sy(p.y)) + "\" r=\"3\" fill=\"" + color +
                   "\"/>\n";
        }
        out += "</g>\n";
    }
    out += svg::legend(names) + "</svg>\n";
    return out;
}

/// Grouped bar chart: one group per entry, one bar per category.
inline std::string render_bar_svg(std::string_view title, std::string_view ylabel,
                                  const std::vector<std::string>& categories, const std::vector<BarGroup>& groups) {
    if (groups.empty() || categories.empty()) {
        throw InvalidArgument("bar chart needs at least one group and one category");
    }
    double yhi = 0.0;
    for (const auto& g : groups) {
        for (double v : g.values) yhi = std::max(yhi, v);
    }
    const auto ya = svg::Axis::fit(0.0, yhi);
    const svg::Axis xa{0.0, 1.0, 1.0};
    const double x0 = svg::kLeft, x1 = svg::kWidth - svg::kRight, y0 = svg::kHeight - svg::kBottom, y1 = svg::kTop;
    auto sy = [&](double v) { return y0 - (v - ya.lo) / (ya.hi - ya.lo) * (y0 - y1); };

    std::string out = svg::header(title) + svg::axes(xa, ya, "", ylabel, false);
    const double group_w = (x1 - x0) / static_cast<double>(groups.size());
    const double bar_w = group_w * 0.8 / static_cast<double>(categories.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const double gx = x0 + group_w * static_cast<double>(g) + group_w * 0.1;
        out += "<g class=\"group\" data-name=\"" + svg::escape(groups[g].name) + "\">\n";
        for (std::size_t c = 0; c < categories.size() && c < groups[g].values.size(); ++c) {
            const double v = groups[g].values[c];
            out += "<rect x=\"" + svg::num(gx + bar_w * static_cast<double>(c)) + "\" y=\"" + svg::num(sy(v)) +
                   "\" width=\"" + svg::num(bar_w * 0.95) + "\" height=\"" + svg::num(y0 - sy(v)) + "\" fill=\"" +
                   std::string(svg::kPalette[c % svg::kPalette.size()]) + "\"/>\n";
        }
        out += "<text x=\"" + svg::num(gx + group_w * 0.4) + "\" y=\"" + svg::num(y0 + 18) +
               "\" text-anchor=\"middle\" font-size=\"10\">" + svg::escape(groups[g].name) + "</text>\n</g>\n";
    }
    out += svg::legend(categories) + "</svg>\n";
    return out;
}

// =============================================================================
// Chart data from datasets
// =============================================================================

/// (diameter, R in µm/px) for every part, ascending diameter.
inline Series r_vs_diameter_series(const MeasurementDataset& ds) {
    Series s{ds.name(), {}};
    for (const auto& p : sorted_by_diameter(ds.parts())) {
        s.points.push_back({p.true_diameter_mm(), to_um_per_px(conversion_factor(p.true_diameter_mm(), p.mean_pixels()))});
    }
    return s;
}

inline Series error_vs_diameter_series(const MeasurementDataset& ds, std::string_view ref_id) {
    Series s{ds.name(), {}};
    for (const auto& r : single_r_sweep(ds, ref_id)) {
        s.points.push_back({r.true_mm, r.abs_error_um});
    }
    return s;
}

inline std::string series_csv(std::string_view xname, std::string_view yname, const std::vector<Series>& series,
                              int decimals) {
    std::string out = "series," + std::string(xname) + "," + std::string(yname) + "\n";
    for (const auto& s : series) {
        for (const auto& p : s.points) {
            out += s.name + "," + io::shortest(p.x) + "," + io::fixed(p.y, decimals) + "\n";
        }
    }
    return out;
}

inline PlotOutput emit_plot(PlotKind kind, std::span<const MeasurementDataset> datasets,
                            std::string_view ref_id = "5mm") {
    if (datasets.empty()) {
        throw InvalidArgument("plot needs at least one dataset");
    }
    PlotOutput out;
    switch (kind) {
        case PlotKind::RVsDiameter: {
            std::vector<Series> series;
            for (const auto& ds : datasets) series.push_back(r_vs_diameter_series(ds));
            out.svg = render_line_svg("Conversion factor vs diameter", "Diameter [mm]", "R [µm/px]", series);
            out.csv = series_csv("diameter_mm", "r_um_per_px", series, 3);
            break;
        }
        case PlotKind::ErrorVsDiameter: {
            std::vector<Series> series;
            for (const auto& ds : datasets) series.push_back(error_vs_diameter_series(ds, ref_id));
            out.svg = render_line_svg("Error with a single reference (" + std::string(ref_id) + ")", "Diameter [mm]",
                                      "Absolute error [µm]", series);
            out.csv = series_csv("diameter_mm", "abs_error_um", series, 2);
            break;
        }
        case PlotKind::MapeBars: {
            std::vector<std::string> categories;
            for (const auto& m : kAllMethods) categories.push_back(method_label(m));
            std::vector<BarGroup> groups;
            out.csv = "dataset,method,mape\n";
            for (const auto& ds : datasets) {
                const auto t = evaluate(ds);
                groups.push_back({ds.name(), t.mape});
                for (std::size_t i = 0; i < t.methods.size(); ++i) {
                    out.csv += ds.name() + "," + method_label(t.methods[i]) + "," + io::fixed(t.mape[i], 4) + "\n";
                }
            }
            out.svg = render_bar_svg("Mean absolute percentage error", "MAPE [%]", categories, groups);
            break;
        }
    }
    return out;
}

/// Writes `<dir>/<kind>.svg` and `<dir>/<kind>.csv`.
inline void write_plot(const PlotOutput& plot, PlotKind kind, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    io::write_file_atomic(dir / (plot_kind_name(kind) + ".svg"), plot.svg);
    io::write_file_atomic(dir / (plot_kind_name(kind) + ".csv"), plot.csv);
}

}  // namespace gaugecal
