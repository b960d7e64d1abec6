#include "arkimex/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "arkimex");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = arkimex::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("arkimex_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    fs::create_directories(dir_);
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string out() const { return (dir_ / "out").string(); }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ListMethods) {
  const auto r = run({"list-methods"});
  EXPECT_EQ(r.code, arkimex::kExitOk);
  EXPECT_NE(r.out.find("DBM453"), std::string::npos);
  EXPECT_NE(r.out.find("ARK548"), std::string::npos);
}

TEST_F(CliTest, CertifyAllWritesOneRowPerMethod) {
  const auto r = run({"certify", "--all", "--out", out()});
  EXPECT_EQ(r.code, arkimex::kExitOk) << r.err;
  const std::string csv = slurp(fs::path(out()) / "certification.csv");
  EXPECT_EQ(csv.rfind("# schema_version=1 kind=certification", 0), 0u);
  EXPECT_NE(csv.find("order_E,order_I,order_A,stage_order_E"), std::string::npos);
  EXPECT_NE(csv.find("A_stable,L_stable,B_stable"), std::string::npos);
  std::size_t rows = 0;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) rows += line.empty() || line[0] == '#' ? 0 : 1;
  EXPECT_EQ(rows, 1u + 15u);
  EXPECT_TRUE(fs::exists(fs::path(out()) / "certification.json"));
}

TEST_F(CliTest, CertifyMismatchExitCode) {
  const std::string coeffs = write("c.json", R"({
    "schema_version": 1,
    "methods": [{
      "name": "Wrong",
      "declared": {"order": 1, "implicit_solves": 1, "explicit_evals": 1},
      "explicit": {"A": [["0", "0"], ["1", "0"]], "b": ["1", "0"], "c": ["0", "1"]},
      "implicit": {"A": [["0", "0"], ["0", "1"]], "b": ["0", "1"], "c": ["0", "1"]},
      "properties": {"order": [2, 1, 1], "stage_order": [1, 1, 1], "a_stable": true, "l_stable": true,
                     "b_stable": true, "stiffly_accurate_implicit": true, "stiffly_accurate_explicit": false,
                     "shared_b": false, "shared_c": true, "max_explicit_imag": 0.0}
    }]
  })");
  const auto r = run({"certify", "--all", "--coefficients", coeffs, "--out", out()});
  EXPECT_EQ(r.code, arkimex::kExitMismatch) << r.err;
}

TEST_F(CliTest, MissingConfigLeavesNoOutput) {
  const auto r = run({"converge", "--config", (dir_ / "missing.json").string(), "--out", out()});
  EXPECT_EQ(r.code, arkimex::kExitConfig);
  EXPECT_FALSE(fs::exists(out()));
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, BadConfigKey) {
  const std::string cfg = write("bad.json", R"({"t_finl": 2})");
  const auto r = run({"converge", "--config", cfg, "--out", out()});
  EXPECT_EQ(r.code, arkimex::kExitConfig);
  EXPECT_NE(r.err.find("t_finl"), std::string::npos);
  EXPECT_FALSE(fs::exists(out()));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, arkimex::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, arkimex::kExitUsage);
  EXPECT_EQ(run({"boundary", "--samples", "-3"}).code, arkimex::kExitUsage);
}

TEST_F(CliTest, BadCoefficientFile) {
  const std::string coeffs = write("c.json", R"({"schema_version": 1, "methods": [{"name": "X"}]})");
  EXPECT_EQ(run({"certify", "--all", "--coefficients", coeffs, "--out", out()}).code, arkimex::kExitConfig);
}

TEST_F(CliTest, ConvergeWritesReports) {
  const auto r = run({"converge", "--methods", "ARS232,DBM453", "--ladder", "0.02,0.01,0.005", "--t-final", "1",
                      "--out", out()});
  EXPECT_EQ(r.code, arkimex::kExitOk) << r.err;
  const std::string csv = slurp(fs::path(out()) / "convergence.csv");
  EXPECT_NE(csv.find("DBM453"), std::string::npos);
  EXPECT_TRUE(fs::exists(fs::path(out()) / "convergence.json"));
}

TEST_F(CliTest, UnknownMethodIsSkippedWithWarning) {
  const auto r = run({"converge", "--methods", "ARS232,IMKG232a", "--ladder", "0.02,0.01", "--out", out()});
  EXPECT_EQ(r.code, arkimex::kExitOk) << r.err;
  EXPECT_NE(r.err.find("IMKG232a"), std::string::npos);
}

TEST_F(CliTest, ScanWithScalingStudy) {
  const std::string cfg = write("s.json", R"({"problem": {"type": "oscillator_ensemble"}, "t_final": 100,
                                              "scale_time": true, "methods": ["ARS343"]})");
  const auto r = run({"scan", "--config", cfg, "--scale", "10,100", "--out", out()});
  EXPECT_EQ(r.code, arkimex::kExitOk) << r.err;
  const std::string csv = slurp(fs::path(out()) / "scaling.csv");
  EXPECT_NE(csv.find("ARS343,100,"), std::string::npos);
}

TEST_F(CliTest, ScanWithoutLadderNeedsEnsemble) {
  EXPECT_EQ(run({"scan", "--problem", "split_oscillator", "--methods", "ARS232", "--out", out()}).code,
            arkimex::kExitConfig);
}

TEST_F(CliTest, EnergyAndFloorStudy) {
  const std::string cfg = write("e.json", R"({"problem": {"type": "hyperviscous_oscillator"}, "t_final": 1,
                                              "ladder": [0.01], "methods": ["ARS232"]})");
  EXPECT_EQ(run({"energy", "--config", cfg, "--substeps", "1", "--out", out()}).code, arkimex::kExitOk);
  EXPECT_TRUE(fs::exists(fs::path(out()) / "energy.csv"));
  const std::string fcfg = write("f.json", R"({"problem": {"type": "hyperviscous_oscillator"}, "t_final": 1,
                                               "ladder": [0.1, 0.05, 0.025], "methods": ["DBM453"]})");
  EXPECT_EQ(run({"floor-study", "--config", fcfg, "--out", out()}).code, arkimex::kExitOk);
  EXPECT_TRUE(fs::exists(fs::path(out()) / "floor_study.json"));
}

TEST_F(CliTest, BoundaryCsv) {
  EXPECT_EQ(run({"boundary", "--methods", "ARS232", "--samples", "36", "--out", out()}).code, arkimex::kExitOk);
  const std::string csv = slurp(fs::path(out()) / "boundary.csv");
  EXPECT_NE(csv.find("ARS232,explicit,"), std::string::npos);
  EXPECT_NE(csv.find("ARS232,implicit,"), std::string::npos);
}

TEST_F(CliTest, EnergyFailureExitCode) {
  // ARS232 at dt = 2 on the explicit-only oscillator blows up.
  const std::string cfg = write("u.json", R"({"problem": {"type": "split_oscillator", "omega_implicit": 0},
                                              "t_final": 20000, "ladder": [2.0], "methods": ["ARS232"],
                                              "observe_every": 1000})");
  EXPECT_EQ(run({"energy", "--config", cfg, "--out", out()}).code, arkimex::kExitNumerical);
}
