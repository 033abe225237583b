#include "support/generators.hpp"

#include <gaugecal/calibration.hpp>
#include <gaugecal/calibration_json.hpp>
#include <gaugecal/dataset.hpp>
#include <gaugecal/evaluation.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>

using namespace gaugecal;
using gaugecal::testing::Rng;

namespace {

constexpr int kTrials = 1000;

CalibrationTable glass_gradient_refs() { return training_table(embedded_dataset("glass-gradient")); }
CalibrationTable metal_gradient_refs() { return training_table(embedded_dataset("metal-gradient")); }

double pct_error(double true_mm, double est_mm) { return std::abs(true_mm - est_mm) / true_mm * 100.0; }

void expect_rel(double actual, double expected, double rel) {
    EXPECT_LE(std::abs(actual - expected), rel * std::max(1.0, std::abs(expected))) << actual << " vs " << expected;
}

// Brute-force reimplementations working on the raw (P, D) list.
struct Oracle {
    std::vector<std::pair<double, double>> refs;

    std::size_t nearest(double q) const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < refs.size(); ++i) {
            const double di = std::abs(q - refs[i].first);
            const double db = std::abs(q - refs[best].first);
            if (di < db || (di == db && refs[i].first < refs[best].first)) best = i;
        }
        return best;
    }

    std::pair<std::size_t, std::size_t> pair_for(double q) const {
        constexpr auto none = std::numeric_limits<std::size_t>::max();
        std::size_t lo = none, hi = none;
        for (std::size_t i = 0; i < refs.size(); ++i) {
            if (refs[i].first <= q && (lo == none || refs[i].first > refs[lo].first)) lo = i;
            if (refs[i].first > q && (hi == none || refs[i].first < refs[hi].first)) hi = i;
        }
        auto two_extreme = [&](bool smallest) {
            std::size_t a = none, b = none;
            for (std::size_t i = 0; i < refs.size(); ++i) {
                auto better = [&](std::size_t x, std::size_t y) {
                    return y == none || (smallest ? refs[x].first < refs[y].first : refs[x].first > refs[y].first);
                };
                if (better(i, a)) {
                    b = a;
                    a = i;
                } else if (better(i, b)) {
                    b = i;
                }
            }
            return refs[a].first < refs[b].first ? std::pair{a, b} : std::pair{b, a};
        };
        if (lo == none) return two_extreme(true);
        if (hi == none) return two_extreme(false);
        return {lo, hi};
    }

    double base(std::size_t sorted_index, double q) const {
        auto sorted = refs;
        std::sort(sorted.begin(), sorted.end());
        return sorted[sorted_index].second / sorted[sorted_index].first * q;
    }
    double m0(double q) const {
        double s = 0.0;
        for (const auto& [p, d] : refs) s += d / p;
        return s / double(refs.size()) * q;
    }
    double m1(double q) const {
        const auto& [p, d] = refs[nearest(q)];
        return d / p * q;
    }
    double m2(double q) const {
        const auto [i, j] = pair_for(q);
        const auto [p1, d1] = refs[i];
        const auto [p2, d2] = refs[j];
        const double r1 = d1 / p1, r2 = d2 / p2;
        return (r1 + (r2 - r1) * (q - p1) / (p2 - p1)) * q;
    }
    double m3(double q) const {
        const auto [i, j] = pair_for(q);
        const auto [p1, d1] = refs[i];
        const auto [p2, d2] = refs[j];
        return d1 + (d2 - d1) * (q - p1) / (p2 - p1);
    }
    // Normal equations [n sP; sP sPP] [b m]' = [sD sPD]' by Cramer's rule.
    std::pair<double, double> line() const {
        double n = double(refs.size()), sp = 0, spp = 0, sd = 0, spd = 0;
        for (const auto& [p, d] : refs) {
            sp += p;
            spp += p * p;
            sd += d;
            spd += p * d;
        }
        const double det = n * spp - sp * sp;
        return {(n * spd - sp * sd) / det, (spp * sd - sp * spd) / det};
    }
    double m4(double q) const {
        const auto [m, b] = line();
        return m * q + b;
    }
};

}  // namespace

// =============================================================================
// Examples
// =============================================================================

TEST(ConversionFactor, Examples) {
    EXPECT_NEAR(to_um_per_px(conversion_factor(1.0, 49.38)), 20.251, 0.0005);
    EXPECT_DOUBLE_EQ(conversion_factor(2.0, 2000.0), 0.001);
    EXPECT_NEAR(to_um_per_px(conversion_factor(24.32, 1255.85)), 19.365, 0.0005);
    EXPECT_THROW(conversion_factor(1.0, 0.0), InvalidArgument);
    EXPECT_THROW(conversion_factor(0.0, 10.0), InvalidArgument);
}

TEST(AbsoluteError, Examples) {
    EXPECT_NEAR(absolute_error(1.5, 1.50042), 0.00042, 1e-12);
    EXPECT_EQ(absolute_error(5.0, 5.0), 0.0);
    EXPECT_NEAR(absolute_error(8.0, 8.10212) * 1000.0, 102.12, 0.01);
}

TEST(EstimateBase, SingleReferenceExamples) {
    const CalibrationTable one({{256.38, 5.0}});
    const double oracle_12 = 5.0 / 256.38 * 618.57;
    const auto q12 = estimate_base(one, 0, 618.57);
    EXPECT_NEAR(q12.estimated_mm, oracle_12, 1e-12);
    // Printed R is 19.503; the raw mean gives 19.5023, inside the 0.001 appendix tolerance.
    EXPECT_NEAR(to_um_per_px(*q12.mm_per_px), 19.503, 0.001);
    EXPECT_NEAR(absolute_error(12.0, q12.estimated_mm) * 1000.0, 64.0, 0.5);

    const auto q1 = estimate_base(one, 0, 49.38);
    EXPECT_NEAR(q1.estimated_mm, 0.96307, 0.0001);
    EXPECT_NEAR(absolute_error(1.0, q1.estimated_mm) * 1000.0, 36.9, 0.1);

    EXPECT_EQ(estimate_base(one, 0, 256.38).estimated_mm, 5.0);
    EXPECT_THROW(estimate_base(one, 1, 100.0), InvalidArgument);
    EXPECT_THROW(estimate_base(one, 0, -1.0), InvalidArgument);
}

TEST(EstimateM0, GlassExamples) {
    const auto refs = glass_gradient_refs();
    const auto q = estimate_m0(refs, 411.61);
    EXPECT_NEAR(q.estimated_mm, 8.1021, 0.0005);
    EXPECT_NEAR(pct_error(8.0, q.estimated_mm), 1.2766, 0.02);
    EXPECT_NEAR(to_um_per_px(*q.mm_per_px), 19.684, 0.0005);

    const CalibrationTable one({{100.0, 2.0}});
    EXPECT_EQ(estimate_m0(one, 150.0).estimated_mm, estimate_base(one, 0, 150.0).estimated_mm);
}

TEST(EstimateM1, Examples) {
    const auto glass = glass_gradient_refs();
    const auto q = estimate_m1(glass, 75.31);
    EXPECT_EQ(glass.nearest(75.31), 0u);
    EXPECT_NEAR(q.estimated_mm, 1.5251, 0.0005);
    EXPECT_NEAR(pct_error(1.5, q.estimated_mm), 1.6794, 0.02);

    const auto metal = metal_gradient_refs();
    EXPECT_NEAR(metal[metal.nearest(538.22)].pixels, 441.71, 0.01);
    EXPECT_NEAR(pct_error(10.458, estimate_m1(metal, 538.22).estimated_mm), 0.1316, 0.03);

    for (const auto& e : glass.entries()) EXPECT_EQ(estimate_m1(glass, e.pixels).estimated_mm, e.millimeters);
}

TEST(EstimateM1, TiesGoToSmallerPixels) {
    const CalibrationTable t({{100.0, 1.0}, {200.0, 2.2}});
    EXPECT_EQ(t.nearest(150.0), 0u);
    EXPECT_DOUBLE_EQ(estimate_m1(t, 150.0).estimated_mm, 1.5);
}

TEST(EstimateM2, Examples) {
    const auto glass = glass_gradient_refs();
    const auto q = estimate_m2(glass, 75.31);
    EXPECT_NEAR(to_um_per_px(*q.mm_per_px), 20.091, 0.002);
    EXPECT_NEAR(pct_error(1.5, q.estimated_mm), 0.8755, 0.02);

    const auto metal = metal_gradient_refs();
    EXPECT_EQ(metal.bracket(1221.52), 2u);
    EXPECT_NEAR(pct_error(23.668, estimate_m2(metal, 1221.52).estimated_mm), 0.0387, 0.03);

    for (const auto& e : glass.entries()) {
        const auto at = estimate_m2(glass, e.pixels);
        EXPECT_EQ(*at.mm_per_px, e.mm_per_px);
        EXPECT_EQ(at.estimated_mm, e.millimeters);
    }
}

TEST(EstimateM3, Examples) {
    const auto glass = glass_gradient_refs();
    const auto q = estimate_m3(glass, 75.31);
    EXPECT_NEAR(q.estimated_mm, 1.5006, 0.0005);
    EXPECT_NEAR(pct_error(1.5, q.estimated_mm), 0.0469, 0.02);
    EXPECT_FALSE(q.mm_per_px.has_value());

    const auto radial = training_table(embedded_dataset("glass-radial"));
    EXPECT_NEAR(pct_error(8.0, estimate_m3(radial, 411.34).estimated_mm), 0.0002, 0.02);

    for (const auto& e : glass.entries()) EXPECT_EQ(estimate_m3(glass, e.pixels).estimated_mm, e.millimeters);
}

TEST(EstimateM4, FitExamples) {
    const auto model = estimate_m4_fit(glass_gradient_refs());
    EXPECT_NEAR(*model.slope(), 0.019327, 5e-7);
    EXPECT_NEAR(*model.intercept(), 0.0449, 5e-5);
    EXPECT_NEAR(pct_error(8.0, estimate_m4(model, 411.61).estimated_mm), 0.0003, 0.02);

    const auto two = estimate_m4_fit(CalibrationTable({{100.0, 1.0}, {200.0, 2.0}}));
    EXPECT_NEAR(*two.slope(), 0.01, 1e-15);
    EXPECT_NEAR(*two.intercept(), 0.0, 1e-12);

    const auto metal = estimate_m4_fit(metal_gradient_refs());
    EXPECT_NEAR(pct_error(10.458, estimate_m4(metal, 538.22).estimated_mm), 0.0066, 0.03);
}

TEST(EstimateM4, PassesThroughCentroid) {
    const auto refs = glass_gradient_refs();
    double mp = 0, md = 0;
    for (const auto& e : refs.entries()) {
        mp += e.pixels;
        md += e.millimeters;
    }
    mp /= double(refs.size());
    md /= double(refs.size());
    EXPECT_NEAR(estimate_m4(estimate_m4_fit(refs), mp).estimated_mm, md, 1e-12);
}

TEST(EstimateM4, CollinearReferencesHaveZeroResiduals) {
    const CalibrationTable t({{50.0, 1.1}, {150.0, 3.1}, {300.0, 6.1}, {600.0, 12.1}});
    const auto model = estimate_m4_fit(t);
    for (const auto& e : t.entries()) EXPECT_NEAR(model.estimate(e.pixels).estimated_mm, e.millimeters, 1e-12);
}

TEST(CalibrationTable, RejectsBadInput) {
    EXPECT_THROW(CalibrationTable(std::vector<std::pair<double, double>>{}), InvalidArgument);
    EXPECT_THROW(CalibrationTable({{100.0, 1.0}, {100.0, 1.1}}), InvalidArgument);
    EXPECT_THROW(CalibrationTable({{-1.0, 1.0}}), InvalidArgument);
    EXPECT_THROW(CalibrationTable({{10.0, 0.0}}), InvalidArgument);
    EXPECT_THROW(CalibrationModel(kM2, CalibrationTable({{10.0, 1.0}})), InvalidArgument);
    EXPECT_THROW(CalibrationModel(kM4, CalibrationTable({{10.0, 1.0}})), InvalidArgument);
    EXPECT_THROW(CalibrationModel(Method::base(3), CalibrationTable({{10.0, 1.0}})), InvalidArgument);
}

TEST(CalibrationTable, ExtrapolatesWithOutermostPair) {
    const auto refs = glass_gradient_refs();
    EXPECT_EQ(refs.bracket(10.0), 0u);
    EXPECT_EQ(refs.bracket(5000.0), refs.size() - 2);
    EXPECT_EQ(refs.bracket(refs[1].pixels), 1u);
}

TEST(Method, TagsRoundTrip) {
    for (const auto& m : kAllMethods) EXPECT_EQ(parse_method(method_tag(m)), m);
    EXPECT_EQ(parse_method("base:2"), Method::base(2));
    EXPECT_THROW(parse_method("m5"), InvalidArgument);
    EXPECT_THROW(parse_method("base:"), InvalidArgument);
    EXPECT_THROW(parse_method("base:x"), InvalidArgument);
}

// =============================================================================
// Properties on random tables
// =============================================================================

TEST(CalibrationProperty, ScaleInvariance) {
    Rng rng(11);
    for (int t = 0; t < kTrials; ++t) {
        auto refs = gaugecal::testing::random_references(rng);
        const double c = gaugecal::testing::uniform(rng, 0.1, 10.0);
        auto scaled = refs;
        for (auto& [p, d] : scaled) p *= c;
        const CalibrationTable a(refs), b(scaled);
        const double q = gaugecal::testing::random_query(rng, a);
        for (const auto& m : kAllMethods) {
            expect_rel(CalibrationModel(m, b).estimate(q * c).estimated_mm,
                       CalibrationModel(m, a).estimate(q).estimated_mm, 1e-9);
        }
        const auto i = static_cast<std::size_t>(gaugecal::testing::uniform_int(rng, 0, int(a.size()) - 1));
        expect_rel(estimate_base(b, i, q * c).estimated_mm, estimate_base(a, i, q).estimated_mm, 1e-9);
    }
}

TEST(CalibrationProperty, ExactOnReferences) {
    Rng rng(12);
    for (int t = 0; t < kTrials; ++t) {
        const CalibrationTable table(gaugecal::testing::random_references(rng));
        for (std::size_t i = 0; i < table.size(); ++i) {
            const auto& e = table[i];
            EXPECT_EQ(estimate_m1(table, e.pixels).estimated_mm, e.millimeters);
            EXPECT_EQ(estimate_m2(table, e.pixels).estimated_mm, e.millimeters);
            EXPECT_EQ(estimate_m3(table, e.pixels).estimated_mm, e.millimeters);
            EXPECT_EQ(estimate_base(table, i, e.pixels).estimated_mm, e.millimeters);
        }
        // Collinear references: M4 is exact too.
        std::vector<std::pair<double, double>> line;
        const double m = gaugecal::testing::uniform(rng, 0.001, 0.05);
        const double b = gaugecal::testing::uniform(rng, -0.5, 0.5);
        for (const auto& e : table.entries()) line.emplace_back(e.pixels, m * e.pixels + b + 1.0);
        const auto model = estimate_m4_fit(CalibrationTable(line));
        for (const auto& [p, d] : line) expect_rel(model.estimate(p).estimated_mm, d, 1e-9);
    }
}

TEST(CalibrationProperty, M2EqualsM1WhenBracketRsAgree) {
    Rng rng(13);
    for (int t = 0; t < kTrials; ++t) {
        auto refs = gaugecal::testing::random_references(rng, 2, 6);
        const CalibrationTable base_table(refs);
        const auto k = static_cast<std::size_t>(gaugecal::testing::uniform_int(rng, 0, int(base_table.size()) - 2));
        const double r = base_table[k].mm_per_px;
        std::vector<std::pair<double, double>> edited;
        for (std::size_t i = 0; i < base_table.size(); ++i) {
            const auto& e = base_table[i];
            edited.emplace_back(e.pixels, i == k + 1 ? r * e.pixels : e.millimeters);
        }
        const CalibrationTable table(edited);
        const double q = gaugecal::testing::uniform(rng, table[k].pixels, table[k + 1].pixels);
        const double m2 = estimate_m2(table, q).estimated_mm;
        expect_rel(m2, estimate_m1(table, q).estimated_mm, 1e-12);
        expect_rel(m2, estimate_base(table, k, q).estimated_mm, 1e-12);
        expect_rel(m2, estimate_base(table, k + 1, q).estimated_mm, 1e-12);
    }
}

TEST(CalibrationProperty, M3ContinuousPiecewiseLinearAndMonotone) {
    Rng rng(14);
    for (int t = 0; t < kTrials; ++t) {
        const CalibrationTable table(gaugecal::testing::random_references(rng, 3, 6));
        bool increasing = true;
        for (std::size_t i = 1; i < table.size(); ++i) increasing &= table[i].millimeters > table[i - 1].millimeters;
        // Continuity across every interior reference.
        for (std::size_t i = 1; i + 1 < table.size(); ++i) {
            const double p = table[i].pixels;
            const double eps = 1e-9 * p;
            const auto slope = [&](std::size_t j) {
                return std::abs((table[j + 1].millimeters - table[j].millimeters) / (table[j + 1].pixels - table[j].pixels));
            };
            const double tol = 2.0 * eps * std::max(slope(i - 1), slope(i)) + 1e-12 * table[i].millimeters;
            EXPECT_NEAR(estimate_m3(table, p - eps).estimated_mm, table[i].millimeters, tol);
            EXPECT_NEAR(estimate_m3(table, p + eps).estimated_mm, table[i].millimeters, tol);
        }
        // Linear inside each segment: midpoint is the mean of the ends.
        const auto k = static_cast<std::size_t>(gaugecal::testing::uniform_int(rng, 0, int(table.size()) - 2));
        const double a = table[k].pixels, b = table[k + 1].pixels;
        const double x = gaugecal::testing::uniform(rng, a, b), y = gaugecal::testing::uniform(rng, a, b);
        expect_rel(estimate_m3(table, (x + y) / 2).estimated_mm,
                   (estimate_m3(table, x).estimated_mm + estimate_m3(table, y).estimated_mm) / 2, 1e-9);
        if (increasing) {
            double prev = -std::numeric_limits<double>::infinity();
            for (int s = 0; s <= 50; ++s) {
                const double q = table[0].pixels * 0.5 + s * (table[table.size() - 1].pixels * 1.5 - table[0].pixels * 0.5) / 50;
                const double d = estimate_m3(table, q).estimated_mm;
                EXPECT_GT(d, prev);
                prev = d;
            }
        }
    }
}

TEST(CalibrationProperty, M4ResidualsOrthogonal) {
    Rng rng(15);
    for (int t = 0; t < kTrials; ++t) {
        const CalibrationTable table(gaugecal::testing::random_references(rng));
        const auto model = estimate_m4_fit(table);
        double mp = 0, scale = 0;
        for (const auto& e : table.entries()) mp += e.pixels;
        mp /= double(table.size());
        double s = 0;
        for (const auto& e : table.entries()) {
            const double term = (e.pixels - mp) * (e.millimeters - model.estimate(e.pixels).estimated_mm);
            s += term;
            scale += std::abs((e.pixels - mp) * e.millimeters);
        }
        EXPECT_LE(std::abs(s), 1e-12 * std::max(1.0, scale));
    }
}

TEST(CalibrationProperty, MatchesBruteForceOracle) {
    Rng rng(16);
    for (int t = 0; t < kTrials; ++t) {
        const auto refs = gaugecal::testing::random_references(rng);
        const Oracle oracle{refs};
        const CalibrationTable table(refs);
        const double q = gaugecal::testing::random_query(rng, table);
        expect_rel(estimate_m0(table, q).estimated_mm, oracle.m0(q), 1e-12);
        expect_rel(estimate_m1(table, q).estimated_mm, oracle.m1(q), 1e-12);
        expect_rel(estimate_m2(table, q).estimated_mm, oracle.m2(q), 1e-9);
        expect_rel(estimate_m3(table, q).estimated_mm, oracle.m3(q), 1e-9);
        expect_rel(estimate_m4(estimate_m4_fit(table), q).estimated_mm, oracle.m4(q), 1e-9);
        for (std::size_t i = 0; i < table.size(); ++i) {
            expect_rel(estimate_base(table, i, q).estimated_mm, oracle.base(i, q), 1e-12);
        }
        // Ties for M1: query exactly midway between two references.
        const auto k = static_cast<std::size_t>(gaugecal::testing::uniform_int(rng, 0, int(table.size()) - 2));
        const double mid = (table[k].pixels + table[k + 1].pixels) / 2;
        expect_rel(estimate_m1(table, mid).estimated_mm, oracle.m1(mid), 1e-12);
    }
}

// =============================================================================
// Serialization
// =============================================================================

TEST(CalibrationJson, RoundTripsEveryMethod) {
    const auto refs = glass_gradient_refs();
    const auto dir = std::filesystem::temp_directory_path() / "gaugecal_test_json";
    std::filesystem::create_directories(dir);
    std::vector<Method> methods(std::begin(kAllMethods), std::end(kAllMethods));
    methods.push_back(Method::base(2));
    for (const auto& m : methods) {
        const CalibrationModel model(m, refs);
        const auto path = dir / (method_tag(m).substr(0, 2) + ".json");
        save_model(model, path);
        const auto back = load_model(path);
        EXPECT_EQ(back, model);
        EXPECT_EQ(back.estimate(411.61).estimated_mm, model.estimate(411.61).estimated_mm);
    }
    std::filesystem::remove_all(dir);
}

TEST(CalibrationJson, RejectsMalformedModels) {
    EXPECT_THROW(model_from_json(nlohmann::json::parse(R"({"entries": []})")), DataError);
    EXPECT_THROW(model_from_json(nlohmann::json::parse(R"({"method": "m9", "entries": [{"pixels": 1, "millimeters": 1}]})")),
                 DataError);
    EXPECT_THROW(model_from_json(nlohmann::json::parse(R"({"method": "m2", "entries": [{"pixels": 1, "millimeters": 1}]})")),
                 DataError);
    EXPECT_THROW(load_model("/nonexistent/model.json"), IoError);
}
