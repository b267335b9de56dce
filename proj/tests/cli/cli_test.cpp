// End-to-end tests of the tauber binary: exit-code contract, outputs and
// determinism.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TAUBER_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json result_of(const Run& r) { return json::parse(r.out).at("result"); }

std::filesystem::path tmp_dir() {
  std::filesystem::path dir(TAUBER_TEST_TMP);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct ExitCase {
  const char* args;
  int code;
};

class ExitCodeMatrix : public ::testing::TestWithParam<ExitCase> {};

TEST_P(ExitCodeMatrix, MatchesContract) {
  const auto c = GetParam();
  EXPECT_EQ(run(c.args).code, c.code) << c.args;
}

INSTANTIATE_TEST_SUITE_P(
    Cli, ExitCodeMatrix,
    ::testing::Values(
        ExitCase{"catalog", 0},
        ExitCase{"coeffs --entry const1 --kmax 4", 0},
        ExitCase{"coeffs --entry sawtooth --kmax 5000", 1},
        ExitCase{"coeffs --entry nosuch", 1},
        ExitCase{"check --entry sawtooth --check hardy", 0},
        ExitCase{"check --entry lacunary --check hardy", 2},
        ExitCase{"check --entry lacunary --check tailpower --p 2", 0},
        ExitCase{"check --entry lacunary --check tailpower --p 0.5", 1},
        ExitCase{"check --entry sawtooth --check hl --p 2", 2},
        ExitCase{"check --entry sawtooth --check bogus", 1},
        ExitCase{"check --series alternating --check tailpower --p 2", 2},
        ExitCase{"verify fejer-set --entry squarewave --set 0.3:2.8416,3.4416:5.9832 --nmax 1024", 0},
        ExitCase{"verify fejer-set --entry squarewave --set 0:6.2832", 3},
        ExitCase{"verify hardy-set --entry sawtooth --set 0:6.2832", 3},
        ExitCase{"verify hardy-set --entry sawtooth --set 0.5:5.7832 --ngrid 256:2048:2", 0},
        ExitCase{"verify in-space --entry sawtooth --space W1,2", 2},
        ExitCase{"verify in-space --entry smooth --space L2 --nmax 64", 0},
        ExitCase{"verify tauberian --series alternating", 2},
        ExitCase{"verify tauberian --series lacunary", 0},
        ExitCase{"verify gibbs --entry squarewave", 0},
        ExitCase{"verify nosuch --entry sine", 1},
        ExitCase{"verify fejer-set --entry sine --ngrid 64:32", 1},
        ExitCase{"verify fejer-set --entry sine --set 1:2:3", 1},
        ExitCase{"kernel --n 0,16", 0},
        ExitCase{"kernel --delta 0", 1},
        ExitCase{"", 1},
        ExitCase{"--help", 0}));

TEST(Cli, SawtoothCoefficients) {
  const auto r = run("coeffs --entry sawtooth --kmax 8");
  ASSERT_EQ(r.code, 0);
  const auto res = result_of(r);
  EXPECT_EQ(res.at("k_max"), 8);
  const auto& c = res.at("coefficients");
  for (int k = 1; k <= 8; ++k) {
    const auto& z = c.at(static_cast<std::size_t>(8 + k));
    const double mag = std::hypot(z[0].get<double>(), z[1].get<double>());
    EXPECT_NEAR(mag, 0.5 / k, 1e-5) << k;
  }
}

TEST(Cli, ConstantHasOnlyTheMean) {
  const auto res = result_of(run("coeffs --entry const1 --kmax 4"));
  const auto& c = res.at("coefficients");
  for (int i = 0; i < 9; ++i) {
    const double mag = std::hypot(c[i][0].get<double>(), c[i][1].get<double>());
    EXPECT_NEAR(mag, i == 4 ? 1.0 : 0.0, 1e-15);
  }
}

TEST(Cli, CheckFromCoefficientFile) {
  const auto path = tmp_dir() / "saw_coeffs.json";
  ASSERT_EQ(run("coeffs --entry sawtooth --kmax 2047 --out " + path.string()).code, 0);
  EXPECT_EQ(run("check --check hardy --coeffs-file " + path.string()).code, 0);
  const auto small = tmp_dir() / "small.json";
  ASSERT_EQ(run("coeffs --entry sawtooth --kmax 8 --out " + small.string()).code, 0);
  EXPECT_EQ(run("check --check hardy --coeffs-file " + small.string()).code, 3);
}

TEST(Cli, SawtoothHardyConstant) {
  const auto res = result_of(run("check --entry sawtooth --check hardy"));
  EXPECT_NEAR(res.at("verdict").at("constant_M").get<double>(), 1.0, 1e-9);
}

TEST(Cli, VerifyWritesReportAndCsv) {
  const auto json_path = tmp_dir() / "fejer.json";
  const auto csv_path = tmp_dir() / "fejer.csv";
  const auto r = run("verify fejer-set --entry squarewave --set 0.3:2.8416,3.4416:5.9832 --nmax 1024 --out " +
                     json_path.string() + " --csv " + csv_path.string());
  ASSERT_EQ(r.code, 0);
  const auto report = json::parse(slurp(json_path));
  EXPECT_EQ(report.at("schema"), "tauber-report/1");
  const auto& table = report.at("result").at("table");
  EXPECT_LT(table.back().at("err_cesaro").get<double>(), 0.01);
  const auto csv = slurp(csv_path);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,err_Sn,err_sigman");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
}

TEST(Cli, GibbsFloorReported) {
  const auto res = result_of(run("verify gibbs --entry squarewave"));
  EXPECT_GE(res.at("metrics").at("floor").get<double>(), 0.17);
}

TEST(Cli, KernelAudit) {
  const auto res = result_of(run("kernel --n 0,16,64,256 --delta 0.1"));
  const auto& rows = res.at("rows");
  EXPECT_EQ(rows[0].at("A_residual").get<double>(), 0.0);
  EXPECT_EQ(rows[0].at("B_min").get<double>(), 0.5);
  EXPECT_EQ(rows[0].at("mu").get<double>(), 0.5);
  EXPECT_NEAR(rows[2].at("Bprime_integral").get<double>(), M_PI, 1e-8 * M_PI);
  EXPECT_TRUE(res.at("mu_strictly_decreasing").get<bool>());
}

json without_timestamp(json j) {
  j.erase("timestamp");
  return j;
}

TEST(Cli, IdenticalConfigsGiveIdenticalReports) {
  for (const char* args : {"verify tauberian --series random --seed 9 --ngrid 64:4096:4",
                           "verify hardy-set --entry lacunary",
                           "check --series random --seed 4 --check tailpower --p 2",
                           "catalog"}) {
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, b.code) << args;
    EXPECT_EQ(without_timestamp(json::parse(a.out)).dump(), without_timestamp(json::parse(b.out)).dump())
        << args;
  }
}

TEST(Cli, SeedChangesRandomSeries) {
  const auto a = result_of(run("verify tauberian --series random --seed 1 --ngrid 64:256:4"));
  const auto b = result_of(run("verify tauberian --series random --seed 2 --ngrid 64:256:4"));
  EXPECT_NE(a.at("metrics").dump(), b.at("metrics").dump());
}

}  // namespace
