#include <gaugecal/cli.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace gaugecal;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("gaugecal_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"estimate", "--pixels", "10"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"evaluate", "--dataset", "embedded:glass-gradient", "--bogus"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"evaluate", "--dataset", "embedded:glass-gradient", "--method", "m9"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"evaluate", "--dataset", "embedded:glass-gradient", "--method", "base:5mm"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"measure", path("x.pgm"), "--estimator", "sobel"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"plot", "--kind", "histogram"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, DataErrorsExitOne) {
    const auto r = run({"measure", path("missing.pgm")});
    EXPECT_EQ(r.code, cli::kExitData);
    EXPECT_NE(r.err.find("missing.pgm"), std::string::npos);
    EXPECT_EQ(run({"evaluate", "--dataset", path("missing.csv")}).code, cli::kExitData);
    EXPECT_EQ(run({"estimate", "--model", path("missing.json"), "--pixels", "10"}).code, cli::kExitData);
    EXPECT_EQ(run({"evaluate", "--dataset", "embedded:nope"}).code, cli::kExitData);
}

TEST_F(CliTest, CalibrateThenEstimate) {
    const auto model = path("m4-glass.json");
    ASSERT_EQ(run({"calibrate", "--dataset", "embedded:glass-gradient", "--method", "m4", "--out", model}).code,
              cli::kExitOk);
    ASSERT_TRUE(fs::exists(model));
    const auto r = run({"estimate", "--model", model, "--pixels", "411.61"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto line = r.out.substr(r.out.find('\n') + 1);
    const double mm = std::stod(line.substr(line.find(',') + 1));
    EXPECT_NEAR(mm, 8.0, 5e-5);
}

TEST_F(CliTest, CalibrateBaseByPartId) {
    const auto r = run({"calibrate", "--dataset", "embedded:glass-gradient", "--method", "base:3mm"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NE(r.out.find("\"method\""), std::string::npos);
}

TEST_F(CliTest, EvaluatePrintsTable) {
    const auto r = run({"evaluate", "--dataset", "embedded:glass-gradient", "--format", "csv"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NE(r.out.find("1.5"), std::string::npos);
    EXPECT_NE(r.out.find("M4"), std::string::npos);
    const auto again = run({"evaluate", "--dataset", "embedded:glass-gradient", "--format", "csv"});
    EXPECT_EQ(again.out, r.out);
}

TEST_F(CliTest, ReproduceWritesTablesAndPassesOnPristineData) {
    const auto out = path("repro");
    const auto r = run({"reproduce", "--out", out});
    for (const char* f : {"glass-gradient.md", "glass-radial.md", "glass-counting.md", "metal-gradient.md",
                          "metal-radial.md", "metal-counting.md", "absolute_errors.md", "comparison.md"}) {
        EXPECT_TRUE(fs::exists(fs::path(out) / f)) << f;
    }
    EXPECT_NE(r.out.find("glass-gradient: 50/50"), std::string::npos) << r.out;
    EXPECT_EQ(r.code, cli::kExitOk) << r.out;
}

TEST_F(CliTest, SynthThenMeasure) {
    const auto out = path("synth");
    ASSERT_EQ(run({"synth", "--out", out}).code, cli::kExitOk);
    EXPECT_TRUE(fs::exists(fs::path(out) / "manifest.csv"));
    std::size_t images = 0;
    for (const auto& e : fs::directory_iterator(out)) images += e.path().extension() == ".pgm";
    EXPECT_EQ(images, 36u);

    const auto r = run({"measure", (fs::path(out) / "disk600_v0.pgm").string(), "--estimator", "counting"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    EXPECT_EQ(header, "file,estimator,diameter_px,center_x,center_y,rms_residual,point_count,coverage_sum");
    const auto first = row.find(',');
    const auto second = row.find(',', first + 1);
    EXPECT_NEAR(std::stod(row.substr(second + 1)), 600.0, 0.6);
}

TEST_F(CliTest, PlotWritesSvgAndCsv) {
    for (const char* kind : {"r_vs_diameter", "error_vs_diameter", "mape_bars"}) {
        const auto r = run({"plot", "--kind", kind, "--out", path("plots")});
        ASSERT_EQ(r.code, cli::kExitOk) << kind << r.err;
        EXPECT_TRUE(fs::exists(fs::path(path("plots")) / (std::string(kind) + ".svg"))) << kind;
        EXPECT_TRUE(fs::exists(fs::path(path("plots")) / (std::string(kind) + ".csv"))) << kind;
    }
}
