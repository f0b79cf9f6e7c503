#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fracwave_cli.hpp"

namespace fs = std::filesystem;
using fracwave::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        v.push_back(l);
    }
    return v;
}

std::vector<double> csv_row(const std::string& line) {
    std::vector<double> v;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) {
        v.push_back(std::stod(cell));
    }
    return v;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Value after "# key=" in a dispersion footer.
double footer(const std::string& text, const std::string& key) {
    for (const auto& l : lines(text)) {
        const std::string tag = "# " + key + "=";
        if (l.rfind(tag, 0) == 0) {
            return std::stod(l.substr(tag.size()));
        }
    }
    ADD_FAILURE() << "missing footer " << key;
    return std::nan("");
}

class CliFiles : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("fracwave_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST(CliGeneral, HelpAndVersionExitZero) {
    EXPECT_EQ(cli({"--help"}).code, 0);
    const Result r = cli({"dispersion", "--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("--omega-min"), std::string::npos);
    EXPECT_EQ(cli({"--version"}).code, 0);
}

TEST(CliGeneral, BadInvocationsExitTwoWithUsage) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    const Result r = cli({"check-bound", "--lambda", "abc", "--beta", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
    EXPECT_EQ(cli({"check-bound", "--lambda", "1"}).code, 2);
    EXPECT_EQ(cli({"simulate", "--equation", "heat", "--out-prefix", "x"}).code, 2);
}

TEST(CliCheckBound, SubDiffusionViolates) {
    const Result r = cli({"check-bound", "--lambda", "2", "--beta", "0.5"});
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["satisfied"].get<bool>());
    EXPECT_EQ(j["regime"], "sub-diffusion");
    EXPECT_EQ(j["implied_y"].get<double>(), 2.5);
}

TEST(CliCheckBound, BagleyTorvikAndNormalWave) {
    EXPECT_EQ(cli({"check-bound", "--lambda", "0", "--beta", "0.5"}).code, 0);
    const Result r = cli({"check-bound", "--lambda", "2", "--beta", "2"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["implied_y"].get<double>(), 1.0);
    EXPECT_EQ(j["regime"], "normal-wave");
}

TEST(CliDispersion, LosslessColumnsAreZero) {
    const Result r = cli({"dispersion", "--c0", "1", "--gamma", "0", "--eta", "1", "--s", "2",
                          "--omega-min", "1", "--omega-max", "10", "--points", "16"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    std::size_t rows = 0;
    bool header = false;
    for (const auto& l : ls) {
        if (l == "omega,k_re,k_im,alpha_root,alpha_asymptotic,rel_gap") {
            header = true;
            continue;
        }
        if (l.empty() || l[0] == '#') {
            continue;
        }
        ++rows;
        EXPECT_NE(l.find(",0,0,nan"), std::string::npos) << l;
    }
    EXPECT_TRUE(header);
    EXPECT_EQ(rows, 16u);
    EXPECT_NE(r.out.find("# y_fit=undefined"), std::string::npos);
}

TEST(CliDispersion, ThermoviscousAndTelegrapherFooters) {
    const Result tv = cli({"dispersion", "--gamma", "1e-3", "--eta", "1", "--s", "2"});
    ASSERT_EQ(tv.code, 0) << tv.err;
    EXPECT_NEAR(footer(tv.out, "y_fit"), 2.0, 1e-2);
    EXPECT_EQ(footer(tv.out, "y_analytic"), 2.0);
    const Result tg = cli({"dispersion", "--gamma", "1e-3", "--eta", "1", "--s", "0"});
    ASSERT_EQ(tg.code, 0) << tg.err;
    EXPECT_NEAR(footer(tg.out, "y_fit"), 0.0, 1e-2);
    EXPECT_NEAR(footer(tg.out, "y_diff"), 0.0, 1e-2);
}

TEST(CliDispersion, OutputIsDeterministic) {
    const std::vector<std::string> args = {"dispersion", "--gamma", "0.2", "--eta", "1.4",
                                           "--s", "0.9", "--points", "9", "--no-continuation"};
    EXPECT_EQ(cli(args).out, cli(args).out);
}

TEST(CliDispersion, NamedMediumUsesSiPrefactor) {
    const Result r = cli({"dispersion", "--medium", "Fat", "--eta", "1.5", "--c0", "1450",
                          "--omega-min", "6.283e6", "--omega-max", "6.283e7", "--points", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(footer(r.out, "y_fit"), 1.7, 1e-2);
    EXPECT_EQ(cli({"dispersion", "--medium", "Fat"}).code, 2);
    const Result unknown = cli({"dispersion", "--medium", "Unobtainium", "--eta", "1"});
    EXPECT_EQ(unknown.code, 2);
    EXPECT_NE(unknown.err.find("Water"), std::string::npos);
    EXPECT_EQ(cli({"dispersion", "--gamma", "0.1", "--eta", "1"}).code, 2);
}

TEST(CliDispersion, GrowingBranchExitsThree) {
    const Result r = cli({"dispersion", "--gamma", "0.1", "--eta", "2.5", "--s", "0"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("omega=1"), std::string::npos) << r.err;
}

TEST(CliDispersion, InvalidMediumExitsTwo) {
    EXPECT_EQ(cli({"dispersion", "--gamma", "0.1", "--eta", "2", "--s", "1"}).code, 2);
    EXPECT_EQ(cli({"dispersion", "--gamma", "-1", "--eta", "1", "--s", "1"}).code, 2);
}

TEST_F(CliFiles, DispersionOutWritesCsvAndManifest) {
    const std::string out = path("tv.csv");
    const Result r = cli({"dispersion", "--gamma", "0.01", "--eta", "1", "--s", "2", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(slurp(out).find("# y_fit="), std::string::npos);
    EXPECT_FALSE(fs::exists(out + ".tmp"));
    const auto m = nlohmann::json::parse(slurp(out + ".manifest.json"));
    EXPECT_EQ(m["command"], "dispersion");
    EXPECT_EQ(m["parameters"]["gamma"].get<double>(), 0.01);
    EXPECT_TRUE(m.contains("tool_version"));
    EXPECT_TRUE(m.contains("timestamp"));
}

TEST_F(CliFiles, SimulateHeatEigenmode) {
    const std::string prefix = path("heat");
    const Result r = cli({"simulate", "--equation", "fdwe", "--lambda", "2", "--beta", "1", "--kappa",
                          "1", "--n", "16", "--dt", "1e-3", "--steps", "1000", "--snapshot-every",
                          "1000", "--out-prefix", prefix});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(slurp(prefix + "_snapshots.csv"));
    ASSERT_EQ(ls.size(), 1u + 2u * 16u);
    EXPECT_EQ(ls[0], "t,x,value");
    // Row for t = 1 at x = pi/2 (index 4 of 16).
    const auto row = csv_row(ls[1 + 16 + 4]);
    EXPECT_NEAR(row[0], 1.0, 1e-12);
    EXPECT_NEAR(row[1], fracwave::pi / 2.0, 1e-12);
    EXPECT_NEAR(-std::log(row[2]), 1.0, 1e-3);
    const auto m = nlohmann::json::parse(slurp(prefix + "_manifest.json"));
    EXPECT_EQ(m["command"], "simulate");
    EXPECT_EQ(m["parameters"]["equation"], "fdwe");
    EXPECT_FALSE(fs::exists(prefix + "_measurement.csv"));
}

TEST_F(CliFiles, SimulateThermoviscousMatchesDispersionCommand) {
    const double omega = 2.0;
    const double wl = fracwave::pi;
    const double length = 40.0 * wl;
    const std::size_t n = 1024;
    const double dt = fracwave::harmonic_time_step(omega, 0.5 * length / n);
    const auto per_period = static_cast<std::size_t>(std::llround(2.0 * fracwave::pi / omega / dt));
    ASSERT_EQ(per_period % 4, 0u);
    const std::string prefix = path("tv");
    const Result r = cli({"simulate", "--equation", "thermoviscous", "--gamma", "0.01", "--n",
                          std::to_string(n), "--length", fracwave::cli::fmt17(length), "--initial",
                          "zero", "--source-omega", "2", "--source-x", fracwave::cli::fmt17(4 * wl),
                          "--steps", std::to_string(22 * per_period), "--snapshot-every", "4",
                          "--window-min", fracwave::cli::fmt17(5 * wl), "--window-max",
                          fracwave::cli::fmt17(17 * wl), "--out-prefix", prefix});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto meas = lines(slurp(prefix + "_measurement.csv"));
    ASSERT_EQ(meas.size(), 2u);
    const double alpha_sim = csv_row(meas[1])[1];

    const Result d = cli({"dispersion", "--gamma", "0.01", "--eta", "1", "--s", "2", "--omega-min",
                          "2", "--omega-max", "4", "--points", "3"});
    ASSERT_EQ(d.code, 0);
    double alpha_root = 0.0;
    for (const auto& l : lines(d.out)) {
        if (!l.empty() && l[0] == '2') {
            alpha_root = csv_row(l)[3];
            break;
        }
    }
    ASSERT_GT(alpha_root, 0.0);
    EXPECT_NEAR(alpha_sim, alpha_root, 0.02 * alpha_root);
}

TEST_F(CliFiles, SimulateBurgersZeroInitialCondition) {
    const std::string prefix = path("bz");
    const Result r = cli({"simulate", "--equation", "burgers", "--lambda", "1.5", "--beta", "0.8",
                          "--initial", "zero", "--n", "16", "--steps", "20", "--snapshot-every", "5",
                          "--out-prefix", prefix});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(slurp(prefix + "_snapshots.csv"));
    ASSERT_EQ(ls.size(), 1u + 5u * 16u);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        EXPECT_EQ(csv_row(ls[i])[2], 0.0);
    }
}

TEST_F(CliFiles, SimulateErrorsMapToExitCodes) {
    const std::string prefix = path("bad");
    EXPECT_EQ(cli({"simulate", "--equation", "lossy", "--gamma", "1", "--eta", "2.5", "--s", "0.5",
                   "--out-prefix", prefix})
                  .code,
              2);
    EXPECT_EQ(cli({"simulate", "--equation", "fdwe", "--lambda", "2", "--beta", "0.5", "--out-prefix",
                   prefix})
                  .code,
              0);
    EXPECT_EQ(cli({"simulate", "--equation", "telegrapher", "--gamma", "0.1", "--dt", "1",
                   "--out-prefix", prefix})
                  .code,
              2);
    EXPECT_EQ(cli({"simulate", "--equation", "fdwe", "--source-omega", "2", "--out-prefix", prefix}).code,
              2);
    EXPECT_EQ(cli({"simulate", "--equation", "burgers", "--lambda", "0.5", "--beta", "1", "--kappa",
                   "1e-6", "--amplitude", "1000", "--n", "64", "--dt", "0.5", "--steps", "2000",
                   "--snapshot-every", "2000", "--out-prefix", prefix})
                  .code,
              3);
    // Too few periods for a steady measurement.
    EXPECT_EQ(cli({"simulate", "--equation", "thermoviscous", "--gamma", "0.01", "--n", "256",
                   "--length", "100", "--initial", "zero", "--source-omega", "2", "--steps", "200",
                   "--out-prefix", prefix})
                  .code,
              3);
}

TEST(CliMedia, ListShowsBuiltins) {
    const Result r = cli({"media", "list"});
    ASSERT_EQ(r.code, 0);
    for (const char* name : {"Water", "Fat", "DuctCancer", "BodyTissue", "RigidTubeBoundaryLayer",
                             "SedimentsRock"}) {
        EXPECT_NE(r.out.find(name), std::string::npos) << name;
    }
}

TEST(CliMedia, ConvertWater) {
    const Result r = cli({"media", "convert", "--name", "Water"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto v = csv_row(lines(r.out).at(1));
    EXPECT_NEAR(v[0], 6.4158e-16, 1e-19);
    EXPECT_EQ(v[1], 2.0);
    const auto direct = csv_row(lines(cli({"media", "convert", "--alpha0-db", "1", "--y", "0"}).out).at(1));
    EXPECT_NEAR(direct[0], 11.51293, 1e-5);
}

TEST(CliMedia, ConvertErrors) {
    const Result unknown = cli({"media", "convert", "--name", "Mercury"});
    EXPECT_EQ(unknown.code, 2);
    EXPECT_NE(unknown.err.find("BodyTissue"), std::string::npos);
    EXPECT_EQ(cli({"media", "convert", "--name", "SedimentsRock"}).code, 2);
    EXPECT_EQ(cli({"media", "convert"}).code, 2);
    EXPECT_EQ(cli({"media"}).code, 2);
}

TEST(CliMedia, InvertThermoviscous) {
    const Result r = cli({"media", "invert", "--alpha0-si", "0.005", "--y", "2", "--c0", "1", "--eta", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto v = csv_row(lines(r.out).at(1));
    EXPECT_NEAR(v[1], 0.01, 1e-15);
    EXPECT_EQ(v[2], 1.0);
    EXPECT_EQ(v[3], 2.0);
    const Result bad = cli({"media", "invert", "--alpha0-si", "0.1", "--y", "2", "--eta", "0.5"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("valid eta"), std::string::npos);
}

TEST_F(CliFiles, MediaFileFlagAndEnvironment) {
    const std::string file = path("extra.csv");
    std::ofstream(file) << "name,alpha0_db_per_cm_per_MHz_y,y\nGel,0.3,1.1\n";
    const Result r = cli({"media", "--media-file", file, "list"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("Gel 0.3 1.1"), std::string::npos);

    ::setenv("FRACWAVE_MEDIA_FILE", file.c_str(), 1);
    const Result env = cli({"media", "convert", "--name", "Gel"});
    ::unsetenv("FRACWAVE_MEDIA_FILE");
    EXPECT_EQ(env.code, 0) << env.err;

    const std::string broken = path("broken.csv");
    std::ofstream(broken) << "name,alpha0_db_per_cm_per_MHz_y,y\nGel,-0.3,1.1\n";
    const Result b = cli({"media", "--media-file", broken, "list"});
    EXPECT_EQ(b.code, 2);
    EXPECT_NE(b.err.find("line 2"), std::string::npos);
}

TEST_F(CliFiles, VerifyQuickPassesAndReportsJson) {
    const std::string json = path("verify.json");
    const Result r = cli({"verify", "--quick", "--json", json});
    EXPECT_EQ(r.code, 0) << r.out;
    std::size_t pass_lines = 0;
    for (const auto& l : lines(r.out)) {
        pass_lines += l.rfind("[PASS]", 0) == 0 ? 1 : 0;
    }
    EXPECT_EQ(pass_lines, 9u);
    const auto j = nlohmann::json::parse(slurp(json));
    EXPECT_TRUE(j["all_passed"].get<bool>());
    EXPECT_EQ(j["criteria"].size(), 9u);
}

TEST_F(CliFiles, VerifyWithCorruptMediaFileExitsTwo) {
    const std::string broken = path("corrupt.csv");
    std::ofstream(broken) << "not,a,header\n";
    const Result r = cli({"verify", "--quick", "--media-file", broken});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 1"), std::string::npos);
}
