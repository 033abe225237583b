#include "support/generators.hpp"

#include <gaugecal/synth.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

using namespace gaugecal;
using gaugecal::testing::Rng;

namespace {

/// 64 x 64 supersampled coverage, no shortcuts.
double coverage_oracle(double cx, double cy, double r, int x, int y) {
    constexpr int n = 64;
    int inside = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double sx = x - 0.5 + (i + 0.5) / n - cx;
            const double sy = y - 0.5 + (j + 0.5) / n - cy;
            if (sx * sx + sy * sy < r * r) ++inside;
        }
    }
    return double(inside) / (n * n);
}

double dark_sum(const FloatImage& img, double fg, double bg) {
    double s = 0;
    for (double v : img.pixels()) s += (bg - v) / (bg - fg);
    return s;
}

double dark_sum(const GrayImage& img, double fg, double bg) {
    double s = 0;
    for (auto v : img.pixels()) s += (bg - v) / (bg - fg);
    return s;
}

DiskSpec spec(double d, int side, double cx, double cy, std::optional<double> sigma = std::nullopt) {
    DiskSpec s;
    s.width = s.height = side;
    s.center_x = cx;
    s.center_y = cy;
    s.diameter = d;
    s.blur_sigma = sigma;
    return s;
}

}  // namespace

TEST(PixelCoverage, InteriorAndBoundary) {
    EXPECT_EQ(pixel_coverage(0, 0, 10, 0, 0), 1.0);
    EXPECT_EQ(pixel_coverage(0, 0, 10, 20, 0), 0.0);
    // Straight edge through the pixel center of a huge disk.
    EXPECT_NEAR(pixel_coverage(0, 0, 1e5, 100000, 0), 0.5, 1.0 / 256);
    const double value = 255 - 255 * pixel_coverage(0, 0, 1e5, 100000, 0);
    EXPECT_NEAR(value, 127.5, 1.0);
}

TEST(PixelCoverage, AgreesWithFineOracle) {
    Rng rng(31);
    for (int t = 0; t < 500; ++t) {
        const double cx = gaugecal::testing::uniform(rng, -2, 2);
        const double cy = gaugecal::testing::uniform(rng, -2, 2);
        const double r = gaugecal::testing::uniform(rng, 0.5, 30);
        const int x = gaugecal::testing::uniform_int(rng, -32, 32);
        const int y = gaugecal::testing::uniform_int(rng, -32, 32);
        // Each grid's area error is bounded by the boundary samples it straddles.
        EXPECT_NEAR(pixel_coverage(cx, cy, r, x, y), coverage_oracle(cx, cy, r, x, y), 0.07);
    }
}

TEST(RenderDisk, CoverageSumMatchesAnalyticArea) {
    const auto img = render_disk(spec(200, 220, 109.5, 109.5));
    const double area = std::numbers::pi * 100 * 100;
    EXPECT_NEAR(dark_sum(img, 0, 255), area, 0.001 * area);
}

TEST(RenderDisk, FieldSumMatchesFineOracleForRandomDisks) {
    Rng rng(32);
    for (int t = 0; t < 10; ++t) {
        const double d = gaugecal::testing::uniform(rng, 20, 60);
        const auto s = spec(d, 70, 34.5 + gaugecal::testing::uniform(rng, -1, 1),
                            34.5 + gaugecal::testing::uniform(rng, -1, 1));
        const auto field = render_disk_field(s);
        double oracle = 0;
        for (int y = 0; y < 70; ++y)
            for (int x = 0; x < 70; ++x) oracle += coverage_oracle(s.center_x, s.center_y, d / 2, x, y);
        const double area = std::numbers::pi * d * d / 4;
        EXPECT_NEAR(dark_sum(field, 0, 255), oracle, 0.001 * area);
        EXPECT_NEAR(oracle, area, 0.001 * area);
    }
}

TEST(RenderDisk, BlurPreservesCoverageSum) {
    for (double d : {50.0, 120.0}) {
        const int side = static_cast<int>(d) + 30;
        const double c = (side - 1) / 2.0 + 0.25;
        const double sharp = dark_sum(render_disk_field(spec(d, side, c, c)), 0, 255);
        const double blurred = dark_sum(render_disk_field(spec(d, side, c, c, 1.5)), 0, 255);
        EXPECT_NEAR(blurred, sharp, 0.0005 * sharp);
    }
}

TEST(RenderDisk, MirrorSymmetricWhenCentered) {
    const auto img = render_disk(spec(75, 101, 50, 50, 1.5));
    for (int y = 0; y < 101; ++y) {
        for (int x = 0; x < 101; ++x) {
            ASSERT_EQ(img(x, y), img(100 - x, y));
            ASSERT_EQ(img(x, y), img(x, 100 - y));
            ASSERT_EQ(img(x, y), img(y, x));
        }
    }
}

TEST(RenderDisk, CustomIntensities) {
    auto s = spec(30, 50, 24.5, 24.5);
    s.foreground = 200;
    s.background = 40;
    const auto img = render_disk(s);
    EXPECT_EQ(img(24, 24), 200);
    EXPECT_EQ(img(0, 0), 40);
}

TEST(DiskSpec, Validation) {
    EXPECT_THROW(spec(0, 50, 25, 25).validate(), InvalidArgument);
    EXPECT_THROW(spec(10, 0, 25, 25).validate(), InvalidArgument);
    EXPECT_THROW(spec(46, 50, 24.5, 24.5).validate(), InvalidArgument);
    EXPECT_NO_THROW(spec(45, 50, 24.5, 24.5).validate());
    EXPECT_THROW(spec(36, 50, 24.5, 24.5, 1.5).validate(), InvalidArgument);
    EXPECT_THROW(spec(10, 50, 25, 25, 0.0).validate(), InvalidArgument);
    auto s = spec(10, 50, 25, 25);
    s.foreground = 256;
    EXPECT_THROW(s.validate(), InvalidArgument);
    EXPECT_THROW(render_disk(spec(80, 50, 25, 25)), InvalidArgument);
}

TEST(Table2Suite, Layout) {
    const auto suite = table2_suite();
    ASSERT_EQ(suite.size(), 36u);
    std::set<std::string> ids;
    double smallest = 1e9;
    for (const auto& e : suite) {
        ids.insert(e.id);
        smallest = std::min(smallest, e.true_diameter);
        EXPECT_EQ(e.spec.diameter, e.true_diameter);
        EXPECT_EQ(e.spec.blur_sigma, 1.5);
        EXPECT_GE(e.spec.width, e.true_diameter + 22);
        EXPECT_NO_THROW(e.spec.validate());
    }
    EXPECT_EQ(ids.size(), 36u);
    EXPECT_EQ(smallest, 50.0);
    EXPECT_EQ(suite[0].id, "disk50_v0");
    EXPECT_EQ(suite[3].spec.center_x - suite[0].spec.center_x, 0.25);
    EXPECT_EQ(suite[3].spec.center_y - suite[0].spec.center_y, 0.25);
}

TEST(Table2Suite, ManifestLine) {
    const auto suite = table2_suite();
    EXPECT_EQ(suite_manifest_header(), "id,diameter_px,center_x,center_y,sigma,file\n");
    EXPECT_EQ(suite_manifest_line(suite[1], "disk50_v1.pgm"), "disk50_v1,50,35.75,35.5,1.5,disk50_v1.pgm\n");
}
