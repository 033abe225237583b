/**
 * @file synth.hpp
 * @brief Anti-aliased synthetic disk images with known diameter
 */

#pragma once

#include <gaugecal/imaging.hpp>
#include <gaugecal/io.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace gaugecal {

struct DiskSpec {
    double center_x = 0.0;
    double center_y = 0.0;
    double diameter = 0.0;  ///< px
    int foreground = 0;
    int background = 255;
    std::optional<double> blur_sigma;
    int width = 0;
    int height = 0;

    /// Disk plus blur support must leave at least `kMargin` px to every edge.
    static constexpr double kMargin = 2.0;

    void validate() const {
        if (!(diameter > 0.0)) throw InvalidArgument("disk diameter must be > 0");
        if (width < 1 || height < 1) throw InvalidArgument("canvas dimensions must be >= 1");
        if (foreground < 0 || foreground > 255 || background < 0 || background > 255) {
            throw InvalidArgument("intensities must be in [0, 255]");
        }
        if (blur_sigma && !(*blur_sigma > 0.0)) throw InvalidArgument("blur sigma must be > 0");
        const double reach = diameter / 2.0 + (blur_sigma ? gaussian_radius(*blur_sigma) : 0) + kMargin;
        if (center_x - reach < 0.0 || center_x + reach > width - 1.0 || center_y - reach < 0.0 ||
            center_y + reach > height - 1.0) {
            throw InvalidArgument("disk does not fit inside the canvas");
        }
    }
};

inline constexpr int kCoverageSamples = 16;

/// Fraction of the unit pixel square centered at (x, y) lying inside the
/// disk, by regular n x n supersampling. Squares entirely inside or outside
/// return 1 / 0 without sampling.
inline double pixel_coverage(double cx, double cy, double radius, int x, int y) {
    const double dx = std::abs(x - cx);
    const double dy = std::abs(y - cy);
    const double r2 = radius * radius;
    const double fx = dx + 0.5, fy = dy + 0.5;
    if (fx * fx + fy * fy <= r2) return 1.0;
    const double nx = std::max(dx - 0.5, 0.0), ny = std::max(dy - 0.5, 0.0);
    if (nx * nx + ny * ny >= r2) return 0.0;
    int inside = 0;
    for (int j = 0; j < kCoverageSamples; ++j) {
        const double sy = y - 0.5 + (j + 0.5) / kCoverageSamples - cy;
        for (int i = 0; i < kCoverageSamples; ++i) {
            const double sx = x - 0.5 + (i + 0.5) / kCoverageSamples - cx;
            if (sx * sx + sy * sy < r2) ++inside;
        }
    }
    return double(inside) / double(kCoverageSamples * kCoverageSamples);
}

/// Intensity field before quantization (blurred if the spec asks for it).
inline FloatImage render_disk_field(const DiskSpec& spec) {
    spec.validate();
    FloatImage img(spec.width, spec.height);
    const double r = spec.diameter / 2.0;
    const double span = double(spec.foreground) - double(spec.background);
    for (int y = 0; y < spec.height; ++y) {
        for (int x = 0; x < spec.width; ++x) {
            img(x, y) = spec.background + span * pixel_coverage(spec.center_x, spec.center_y, r, x, y);
        }
    }
    if (spec.blur_sigma) {
        img = gaussian_blur(img, *spec.blur_sigma);
    }
    return img;
}

inline GrayImage render_disk(const DiskSpec& spec) { return to_gray(render_disk_field(spec)); }

// =============================================================================
// Benchmark suite
// =============================================================================

struct SuiteEntry {
    std::string id;
    DiskSpec spec;
    double true_diameter = 0.0;
};

inline constexpr double kSuiteDiameters[] = {50, 75, 100, 150, 200, 250, 300, 400, 600};
inline constexpr double kSuiteSigma = 1.5;
/// Extra clearance on each side beyond the blur support.
inline constexpr int kSuitePadding = 6;

/// Every suite diameter at four sub-pixel center offsets: (0, 0), (0.25, 0),
/// (0, 0.25), (0.25, 0.25) relative to the canvas center.
inline std::vector<SuiteEntry> table2_suite(double sigma = kSuiteSigma) {
    constexpr double offsets[4][2] = {{0.0, 0.0}, {0.25, 0.0}, {0.0, 0.25}, {0.25, 0.25}};
    std::vector<SuiteEntry> out;
    for (double d : kSuiteDiameters) {
        const int side = static_cast<int>(std::ceil(d)) + 2 * (gaussian_radius(sigma) + kSuitePadding);
        for (int v = 0; v < 4; ++v) {
            DiskSpec s;
            s.width = s.height = side;
            s.center_x = (side - 1) / 2.0 + offsets[v][0];
            s.center_y = (side - 1) / 2.0 + offsets[v][1];
            s.diameter = d;
            s.foreground = 0;
            s.background = 255;
            s.blur_sigma = sigma;
            s.validate();
            out.push_back({"disk" + std::to_string(static_cast<int>(d)) + "_v" + std::to_string(v), s, d});
        }
    }
    return out;
}

inline std::string suite_manifest_header() { return "id,diameter_px,center_x,center_y,sigma,file\n"; }

inline std::string suite_manifest_line(const SuiteEntry& e, const std::string& file) {
    return e.id + "," + io::shortest(e.true_diameter) + "," + io::shortest(e.spec.center_x) + "," +
           io::shortest(e.spec.center_y) + "," + (e.spec.blur_sigma ? io::shortest(*e.spec.blur_sigma) : "") + "," +
           file + "\n";
}

}  // namespace gaugecal
