/**
 * @file cli.hpp
 * @brief `gaugecal` command-line front end
 *
 * Exit codes: 0 success, 1 data or I/O failure (including a reproduction
 * that misses a published cell), 2 usage error.
 */

#pragma once

#include <gaugecal/calibration_json.hpp>
#include <gaugecal/dataset.hpp>
#include <gaugecal/evaluation.hpp>
#include <gaugecal/imaging.hpp>
#include <gaugecal/measurement.hpp>
#include <gaugecal/plot.hpp>
#include <gaugecal/report.hpp>
#include <gaugecal/synth.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace gaugecal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitUsage = 2;

/// Bad flag value detected before any work starts.
class UsageError : public Error {
public:
    using Error::Error;
};

namespace detail {

template <typename F>
auto as_usage(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

/// `base:<part id>` names a training part; anything else goes to parse_method.
inline Method resolve_method(std::string_view tag, const MeasurementDataset& ds) {
    constexpr std::string_view prefix = "base:";
    if (tag.rfind(prefix, 0) == 0) {
        const auto id = tag.substr(prefix.size());
        if (ds.contains(id)) {
            if (!ds.split().training_ids.count(std::string(id))) {
                throw UsageError("base reference '" + std::string(id) + "' is not a training part");
            }
            const auto table = training_table(ds);
            const double d = ds.part(id).true_diameter_mm();
            for (std::size_t i = 0; i < table.size(); ++i) {
                if (table[i].millimeters == d) return Method::base(i);
            }
        }
    }
    return as_usage([&] { return parse_method(tag); });
}

inline std::vector<MeasurementDataset> datasets_or_all(const std::vector<std::string>& specs) {
    if (specs.empty()) return embedded_datasets();
    std::vector<MeasurementDataset> out;
    for (const auto& s : specs) out.push_back(resolve_dataset(s));
    return out;
}

inline void write_or_print(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        io::write_file_atomic(path, text);
    }
}

inline std::string estimate_csv_line(const std::string& file, const DiameterEstimate& e) {
    std::string line = file + "," + estimator_name(e.estimator) + "," + io::fixed(e.diameter, 4) + ",";
    if (e.fit) {
        line += io::fixed(e.fit->center.x, 4) + "," + io::fixed(e.fit->center.y, 4) + "," +
                io::fixed(e.fit->rms_residual, 4) + "," + std::to_string(e.fit->point_count) + ",";
    } else {
        line += ",,,,";
    }
    if (e.coverage_sum) line += io::fixed(*e.coverage_sum, 4);
    return line + "\n";
}

}  // namespace detail

struct Options {
    std::vector<std::string> datasets;
    std::vector<std::string> methods;
    std::vector<std::string> images;
    std::string estimator;
    std::string out;
    std::string format;
    std::string model;
    std::string kind;
    std::string ref = "5mm";
    double sigma = kSuiteSigma;
    double pixels = 0.0;
};

// =============================================================================
// Subcommands
// =============================================================================

inline int cmd_synth(const Options& o, std::ostream& out) {
    if (!(o.sigma > 0.0)) throw UsageError("--sigma must be > 0");
    const std::filesystem::path dir = o.out.empty() ? "synth" : o.out;
    std::filesystem::create_directories(dir);
    std::string manifest = suite_manifest_header();
    for (const auto& e : table2_suite(o.sigma)) {
        const auto file = e.id + ".pgm";
        save_pgm(render_disk(e.spec), dir / file);
        manifest += suite_manifest_line(e, file);
    }
    io::write_file_atomic(dir / "manifest.csv", manifest);
    out << "wrote " << table2_suite(o.sigma).size() << " images to " << dir.string() << "\n";
    return kExitOk;
}

inline int cmd_measure(const Options& o, std::ostream& out) {
    std::vector<Estimator> estimators;
    if (o.estimator.empty() || o.estimator == "all") {
        estimators = {Estimator::EdgeGradient, Estimator::EdgeRadial, Estimator::AreaCounting};
    } else {
        estimators = {detail::as_usage([&] { return parse_estimator(o.estimator); })};
    }
    std::string text = "file,estimator,diameter_px,center_x,center_y,rms_residual,point_count,coverage_sum\n";
    for (const auto& path : o.images) {
        const auto img = load_pgm(path);
        for (auto e : estimators) text += detail::estimate_csv_line(path, measure(img, e));
    }
    detail::write_or_print(text, o.out, out);
    return kExitOk;
}

inline int cmd_calibrate(const Options& o, std::ostream& out) {
    if (o.methods.size() > 1) throw UsageError("calibrate takes a single --method");
    const auto ds = resolve_dataset(o.datasets.front());
    const auto method = detail::resolve_method(o.methods.empty() ? "m4" : o.methods.front(), ds);
    const CalibrationModel model(method, training_table(ds));
    const auto text = to_json(model).dump(2) + "\n";
    detail::write_or_print(text, o.out, out);
    return kExitOk;
}

inline int cmd_estimate(const Options& o, std::ostream& out) {
    if (!(o.pixels > 0.0)) throw UsageError("--pixels must be > 0");
    const auto model = load_model(o.model);
    const auto q = model.estimate(o.pixels);
    out << "pixels,estimated_mm,r_um_per_px\n"
        << io::shortest(o.pixels) << "," << io::fixed(q.estimated_mm, 6) << ","
        << (q.mm_per_px ? io::fixed(to_um_per_px(*q.mm_per_px), 3) : std::string()) << "\n";
    return kExitOk;
}

inline int cmd_evaluate(const Options& o, std::ostream& out) {
    const auto format = detail::as_usage([&] { return parse_report_format(o.format.empty() ? "markdown" : o.format); });
    const auto ds = resolve_dataset(o.datasets.front());
    std::vector<Method> methods;
    for (const auto& tag : o.methods) methods.push_back(detail::resolve_method(tag, ds));
    if (methods.empty()) methods.assign(std::begin(kAllMethods), std::end(kAllMethods));
    detail::write_or_print(render_evaluation(evaluate(ds, methods), format), o.out, out);
    return kExitOk;
}

inline int cmd_reproduce(const Options& o, std::ostream& out) {
    const auto format = detail::as_usage([&] { return parse_report_format(o.format.empty() ? "markdown" : o.format); });
    const std::filesystem::path dir = o.out.empty() ? "reproduction" : o.out;
    const auto ext = report_extension(format);
    std::filesystem::create_directories(dir);

    const auto datasets = embedded_datasets();
    ComparisonResult all;
    for (const auto& ds : datasets) {
        const auto table = evaluate(ds);
        io::write_file_atomic(dir / (ds.name() + ext), render_evaluation(table, format));
        const auto cmp = compare_to_published(table);
        out << ds.name() << ": " << cmp.cells.size() - cmp.failures() << "/" << cmp.cells.size()
            << " cells within tolerance\n";
        all.append(cmp);
    }
    const auto abs_table = absolute_error_table(datasets);
    io::write_file_atomic(dir / ("absolute_errors" + ext), render_absolute_errors(abs_table, format));
    const auto abs_cmp = compare_absolute_errors(abs_table);
    out << "absolute errors: " << abs_cmp.cells.size() - abs_cmp.failures() << "/" << abs_cmp.cells.size()
        << " cells within tolerance\n";
    all.append(abs_cmp);
    io::write_file_atomic(dir / ("comparison" + ext), render_comparison(all, format));

    if (all.all_pass()) {
        out << "all " << all.cells.size() << " cells reproduced\n";
        return kExitOk;
    }
    out << all.failures() << " of " << all.cells.size() << " cells outside tolerance (see "
        << (dir / ("comparison" + ext)).string() << ")\n";
    return kExitData;
}

inline int cmd_plot(const Options& o, std::ostream& out) {
    const auto kind = detail::as_usage([&] { return parse_plot_kind(o.kind); });
    const auto format = o.format.empty() ? std::string("svg") : o.format;
    if (format != "svg" && format != "csv") throw UsageError("plot supports --format svg or csv");
    auto datasets = detail::datasets_or_all(o.datasets);
    if (kind == PlotKind::ErrorVsDiameter && o.datasets.empty()) {
        std::erase_if(datasets, [&](const MeasurementDataset& ds) { return !ds.contains(o.ref); });
    }
    const auto plot = emit_plot(kind, datasets, o.ref);
    const std::filesystem::path dir = o.out.empty() ? "." : o.out;
    if (format == "svg") {
        write_plot(plot, kind, dir);
    } else {
        std::filesystem::create_directories(dir);
        io::write_file_atomic(dir / (plot_kind_name(kind) + ".csv"), plot.csv);
    }
    out << "wrote " << (dir / plot_kind_name(kind)).string() << (format == "svg" ? ".svg/.csv" : ".csv") << "\n";
    return kExitOk;
}

// =============================================================================
// Entry point
// =============================================================================

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pixel-to-millimeter calibration and sub-pixel disk measurement", "gaugecal"};
    app.require_subcommand(1);
    Options o;

    auto* synth = app.add_subcommand("synth", "Render the synthetic disk suite as PGM images");
    synth->add_option("--out", o.out, "Output directory");
    synth->add_option("--sigma", o.sigma, "Gaussian blur sigma in px");

    auto* measure = app.add_subcommand("measure", "Measure disk diameters in PGM images");
    measure->add_option("images", o.images, "PGM files")->required();
    measure->add_option("--estimator", o.estimator, "gradient, radial, counting or all");
    measure->add_option("--out", o.out, "CSV output file (default stdout)");

    auto* calibrate = app.add_subcommand("calibrate", "Fit a model on a dataset's training split");
    calibrate->add_option("--dataset", o.datasets, "Dataset file or embedded:NAME")->required()->expected(1);
    calibrate->add_option("--method", o.methods, "m0..m4 or base:<part id>");
    calibrate->add_option("--out", o.out, "Model JSON file (default stdout)");

    auto* estimate = app.add_subcommand("estimate", "Convert a pixel diameter with a saved model");
    estimate->add_option("--model", o.model, "Model JSON file")->required();
    estimate->add_option("--pixels", o.pixels, "Measured diameter in px")->required();

    auto* evaluate_cmd = app.add_subcommand("evaluate", "Score methods on a dataset's test split");
    evaluate_cmd->add_option("--dataset", o.datasets, "Dataset file or embedded:NAME")->required()->expected(1);
    evaluate_cmd->add_option("--method", o.methods, "m0..m4 or base:<part id>; repeatable");
    evaluate_cmd->add_option("--format", o.format, "csv or markdown");
    evaluate_cmd->add_option("--out", o.out, "Output file (default stdout)");

    auto* reproduce = app.add_subcommand("reproduce", "Regenerate every error table and compare to the published values");
    reproduce->add_option("--out", o.out, "Output directory");
    reproduce->add_option("--format", o.format, "csv or markdown");

    auto* plot = app.add_subcommand("plot", "Emit SVG and CSV figures");
    plot->add_option("--kind", o.kind, "r_vs_diameter, error_vs_diameter or mape_bars")->required();
    plot->add_option("--dataset", o.datasets, "Dataset file or embedded:NAME; repeatable");
    plot->add_option("--ref", o.ref, "Reference part for error_vs_diameter");
    plot->add_option("--format", o.format, "svg or csv");
    plot->add_option("--out", o.out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(synth)) return cmd_synth(o, out);
        if (app.got_subcommand(measure)) return cmd_measure(o, out);
        if (app.got_subcommand(calibrate)) return cmd_calibrate(o, out);
        if (app.got_subcommand(estimate)) return cmd_estimate(o, out);
        if (app.got_subcommand(evaluate_cmd)) return cmd_evaluate(o, out);
        if (app.got_subcommand(reproduce)) return cmd_reproduce(o, out);
        if (app.got_subcommand(plot)) return cmd_plot(o, out);
    } catch (const UsageError& e) {
        err << "gaugecal: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const Error& e) {
        err << "gaugecal: " << e.what() << "\n";
        return kExitData;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "gaugecal: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("gaugecal");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gaugecal::cli
