/**
 * @file measurement.hpp
 * @brief Sub-pixel diameter estimators for a single dark disk on a bright
 *        background
 *
 * Three independent estimators:
 *   edge-gradient  gradient-maximum edges with parabolic refinement + circle fit
 *   edge-radial    half-level crossings along 720 rays + circle fit
 *   area-counting  gray-weighted pixel coverage, D = 2 sqrt(A / pi)
 */

#pragma once

#include <gaugecal/imaging.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gaugecal {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct EdgePoint {
    Vec2 position;
    double magnitude = 0.0;  ///< intensity per pixel
    double direction = 0.0;  ///< radians, dark -> bright
};

struct CircleFit {
    Vec2 center;
    double radius = 0.0;
    double rms_residual = 0.0;
    std::size_t point_count = 0;
};

enum class Estimator { EdgeGradient, EdgeRadial, AreaCounting };

inline std::string estimator_name(Estimator e) {
    switch (e) {
        case Estimator::EdgeGradient: return "edge-gradient";
        case Estimator::EdgeRadial: return "edge-radial";
        case Estimator::AreaCounting: return "area-counting";
    }
    return "?";
}

/// Accepts the CLI short names too: gradient, radial, counting.
inline Estimator parse_estimator(std::string_view s) {
    if (s == "gradient" || s == "edge-gradient") return Estimator::EdgeGradient;
    if (s == "radial" || s == "edge-radial") return Estimator::EdgeRadial;
    if (s == "counting" || s == "area-counting") return Estimator::AreaCounting;
    throw InvalidArgument("unknown estimator '" + std::string(s) + "'");
}

struct DiameterEstimate {
    double diameter = 0.0;  ///< px
    Estimator estimator = Estimator::EdgeGradient;
    std::optional<CircleFit> fit;         ///< edge estimators
    std::optional<double> coverage_sum;   ///< area counting
};

// =============================================================================
// Circle fit
// =============================================================================

namespace detail {

template <typename Proj>
CircleFit fit_circle_impl(std::size_t n, Proj&& point) {
    if (n < 3) {
        throw InvalidArgument("fit_circle: at least 3 points required");
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += point(i).x;
        my += point(i).y;
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = point(i).x - mx, dy = point(i).y - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    // Smallest/largest eigenvalue of the scatter matrix; ~0 means a line.
    const double tr = sxx + syy;
    const double disc = std::sqrt(std::max(0.0, (sxx - syy) * (sxx - syy) / 4.0 + sxy * sxy));
    const double lmax = tr / 2.0 + disc;
    const double lmin = tr / 2.0 - disc;
    if (!(lmax > 0.0) || lmin <= 1e-12 * lmax) {
        throw InvalidArgument("fit_circle: points are collinear");
    }
    const double scale = std::sqrt(tr / double(n));

    // Minimize sum (u^2 + v^2 + A u + B v + C)^2 in normalized coordinates.
    Eigen::Matrix3d normal = Eigen::Matrix3d::Zero();
    Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < n; ++i) {
        const double u = (point(i).x - mx) / scale;
        const double v = (point(i).y - my) / scale;
        const Eigen::Vector3d row(u, v, 1.0);
        normal += row * row.transpose();
        rhs -= (u * u + v * v) * row;
    }
    const Eigen::FullPivLU<Eigen::Matrix3d> lu(normal);
    if (lu.rank() < 3) {
        throw InvalidArgument("fit_circle: degenerate point set");
    }
    const Eigen::Vector3d abc = lu.solve(rhs);
    const double radicand = abc[0] * abc[0] / 4.0 + abc[1] * abc[1] / 4.0 - abc[2];
    if (!(radicand > 0.0)) {
        throw InvalidArgument("fit_circle: negative radicand");
    }
    CircleFit fit;
    fit.center = {mx - abc[0] / 2.0 * scale, my - abc[1] / 2.0 * scale};
    fit.radius = std::sqrt(radicand) * scale;
    fit.point_count = n;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double res = std::hypot(point(i).x - fit.center.x, point(i).y - fit.center.y) - fit.radius;
        ss += res * res;
    }
    fit.rms_residual = std::sqrt(ss / double(n));
    return fit;
}

}  // namespace detail

/// Algebraic (Kasa) least-squares circle.
inline CircleFit fit_circle(std::span<const Vec2> points) {
    return detail::fit_circle_impl(points.size(), [&](std::size_t i) -> const Vec2& { return points[i]; });
}

inline CircleFit fit_circle(std::span<const EdgePoint> points) {
    return detail::fit_circle_impl(points.size(), [&](std::size_t i) -> const Vec2& { return points[i].position; });
}

// =============================================================================
// Gradient edges
// =============================================================================

inline constexpr double kEdgeSmoothingSigma = 1.0;
inline constexpr double kEdgeRelativeThreshold = 0.2;

inline std::vector<EdgePoint> detect_edges_gradient(const GrayImage& image) {
    const auto f = gaussian_blur(to_float(image), kEdgeSmoothingSigma);
    const int w = f.width();
    const int h = f.height();
    FloatImage gx(w, h), gy(w, h), mag(w, h);
    double peak = 0.0;
    for (int y = 1; y + 1 < h; ++y) {
        for (int x = 1; x + 1 < w; ++x) {
            gx(x, y) = (f(x + 1, y) - f(x - 1, y)) / 2.0;
            gy(x, y) = (f(x, y + 1) - f(x, y - 1)) / 2.0;
            mag(x, y) = std::hypot(gx(x, y), gy(x, y));
            peak = std::max(peak, mag(x, y));
        }
    }
    if (!(peak > 0.0)) {
        throw DataError("detect_edges_gradient: no edges above threshold");
    }
    const double threshold = kEdgeRelativeThreshold * peak;
    std::vector<EdgePoint> out;
    for (int y = 1; y + 1 < h; ++y) {
        for (int x = 1; x + 1 < w; ++x) {
            const double m0 = mag(x, y);
            if (m0 <= threshold) continue;
            const double ux = gx(x, y) / m0;
            const double uy = gy(x, y) / m0;
            const double before = sample_bilinear(mag, x - ux, y - uy);
            const double after = sample_bilinear(mag, x + ux, y + uy);
            if (!(m0 >= before && m0 > after)) continue;
            const double curvature = before - 2.0 * m0 + after;
            const double offset = curvature < 0.0 ? std::clamp(0.5 * (before - after) / curvature, -0.5, 0.5) : 0.0;
            EdgePoint p;
            p.position = {x + offset * ux, y + offset * uy};
            p.magnitude = m0 - 0.25 * (before - after) * offset;
            p.direction = std::atan2(uy, ux);
            out.push_back(p);
        }
    }
    if (out.empty()) {
        throw DataError("detect_edges_gradient: no edges above threshold");
    }
    return out;
}

inline DiameterEstimate measure_edge_gradient(const GrayImage& image) {
    const auto edges = detect_edges_gradient(image);
    const auto fit = fit_circle(std::span<const EdgePoint>(edges));
    return {2.0 * fit.radius, Estimator::EdgeGradient, fit, std::nullopt};
}

// =============================================================================
// Radial profiles
// =============================================================================

inline constexpr int kRadialRays = 720;
inline constexpr double kRadialStep = 0.25;

namespace detail {

/// Half-level crossings along rays from `center`.
inline std::vector<Vec2> radial_crossings(const FloatImage& img, Vec2 center, double level) {
    std::vector<Vec2> out;
    out.reserve(kRadialRays);
    const double xmax = img.width() - 1.0;
    const double ymax = img.height() - 1.0;
    for (int k = 0; k < kRadialRays; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / kRadialRays;
        const double dx = std::cos(theta);
        const double dy = std::sin(theta);
        double prev = sample_bilinear(img, center.x, center.y);
        if (prev >= level) {
            throw DataError("measure_edge_radial: center is not inside the dark object");
        }
        bool found = false;
        for (int i = 1;; ++i) {
            const double t = i * kRadialStep;
            const double x = center.x + t * dx;
            const double y = center.y + t * dy;
            if (x < 0.0 || y < 0.0 || x > xmax || y > ymax) break;
            const double cur = sample_bilinear(img, x, y);
            if (cur >= level) {
                const double tc = t - kRadialStep + kRadialStep * (level - prev) / (cur - prev);
                out.push_back({center.x + tc * dx, center.y + tc * dy});
                found = true;
                break;
            }
            prev = cur;
        }
        if (!found) {
            throw DataError("measure_edge_radial: ray " + std::to_string(k) + " found no edge crossing");
        }
    }
    return out;
}

}  // namespace detail

inline DiameterEstimate measure_edge_radial(const GrayImage& image) {
    ClassLevels levels;
    try {
        levels = otsu_class_levels(image);
    } catch (const InvalidArgument&) {
        throw DataError("measure_edge_radial: image has no dark object");
    }
    BinaryMask mask(image.width(), image.height());
    for (std::size_t i = 0; i < image.size(); ++i) mask.pixels()[i] = image.pixels()[i] <= levels.threshold ? 1 : 0;
    const auto labels = label_components(mask);
    const int keep = largest_component(labels);
    double sx = 0.0, sy = 0.0;
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            if (labels.labels(x, y) == keep) {
                sx += x;
                sy += y;
            }
        }
    }
    const double count = double(labels.component_sizes[keep]);
    const double level = 0.5 * (levels.dark + levels.bright);
    const auto f = to_float(image);

    auto points = detail::radial_crossings(f, {sx / count, sy / count}, level);
    auto fit = fit_circle(std::span<const Vec2>(points));
    points = detail::radial_crossings(f, fit.center, level);
    fit = fit_circle(std::span<const Vec2>(points));
    return {2.0 * fit.radius, Estimator::EdgeRadial, fit, std::nullopt};
}

// =============================================================================
// Area counting
// =============================================================================

/// Sum over pixels of clamp((bg - p) / (bg - fg), 0, 1), in fixed raster order.
inline double coverage_sum(const GrayImage& image, double fg_level, double bg_level) {
    if (fg_level == bg_level) {
        throw DataError("coverage_sum: no contrast between object and background");
    }
    const double span = bg_level - fg_level;
    double sum = 0.0;
    for (auto p : image.pixels()) {
        sum += std::clamp((bg_level - p) / span, 0.0, 1.0);
    }
    return sum;
}

inline DiameterEstimate measure_area_counting(const GrayImage& image) {
    ClassLevels levels;
    try {
        levels = otsu_class_levels(image);
    } catch (const InvalidArgument&) {
        throw DataError("measure_area_counting: image has no dark class");
    }
    const double area = coverage_sum(image, levels.dark, levels.bright);
    return {2.0 * std::sqrt(area / std::numbers::pi), Estimator::AreaCounting, std::nullopt, area};
}

inline DiameterEstimate measure(const GrayImage& image, Estimator e) {
    switch (e) {
        case Estimator::EdgeGradient: return measure_edge_gradient(image);
        case Estimator::EdgeRadial: return measure_edge_radial(image);
        case Estimator::AreaCounting: return measure_area_counting(image);
    }
    throw InvalidArgument("unknown estimator");
}

}  // namespace gaugecal
