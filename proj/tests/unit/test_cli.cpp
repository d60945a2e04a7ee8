#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cdent/scenarios.hpp"
#include "cdent/state_io.hpp"
#include "cli.hpp"
#include "json.hpp"

namespace cdent {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(CDENT_TEST_SCRATCH) / ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::create_directories(dir_);
  }

  std::string write_file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

const double kHalf = 1.0 / std::sqrt(2.0);

TEST_F(CliTest, AnalyzeShapePairGivesOneBit) {
  const std::string f = write_file("shape.json", write_state(shape_pair(kHalf, kHalf, {0, 0, 0}, {1, 0, 0}, 1.0, {0, 0, 0})));
  const Result r = run_cli({"analyze", f});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["entropy_bits"].get<double>(), 1.0, 1e-9);
  EXPECT_EQ(j["classification"], "maximal");
  EXPECT_EQ(j["schmidt_rank"], 2);
  EXPECT_EQ(j["h"].size(), 2u);
  EXPECT_EQ(j["spectrum"].size(), 2u);
}

TEST_F(CliTest, SweepQSingleRow) {
  const Result r = run_cli({"sweep-q", "--sigma", "1", "--q-start", "0", "--q-steps", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "q,abs_x,lambda_plus,lambda_minus,entropy_bits,purity\n0.0,1.0,1.0,0.0,0.0,1.0\n");
}

TEST_F(CliTest, SweepToFileMatchesStdout) {
  const std::vector<std::string> base{"sweep-width", "--c0", "0.6", "--c1", "0,0.8", "--sigma0", "1.5",
                                      "--r-start", "0.5", "--r-stop", "4", "--r-steps", "8"};
  const Result r = run_cli(base);
  ASSERT_EQ(r.code, 0) << r.err;
  auto with_out = base;
  with_out.push_back("--out");
  with_out.push_back(path("w.csv"));
  ASSERT_EQ(run_cli(with_out).code, 0);
  EXPECT_EQ(slurp(path("w.csv")), r.out);
  EXPECT_EQ(r.out.rfind("ratio,abs_x,lambda_plus,lambda_minus,entropy_bits,purity\n", 0), 0u);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 9);
}

TEST_F(CliTest, GalileanCheckDeterministic) {
  const std::string f = write_file("beam.json", write_state(beam_pair(kHalf, kHalf, {0, 0, 0}, {0, 0, 1}, 1.0, 1.0)));
  const std::vector<std::string> args{"galilean-check", f, "--samples", "50", "--seed", "17", "--mass", "1.5"};
  const Result a = run_cli(args);
  const Result b = run_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_LT(j["max_spectrum_deviation"].get<double>(), 1e-9);
  EXPECT_LT(j["max_conjugation_deviation"].get<double>(), 1e-9);
  EXPECT_EQ(j["worst_spectrum"]["element"]["rotation"].size(), 4u);
}

TEST_F(CliTest, GalileanCheckOnShapePair) {
  const std::string f =
      write_file("shape.json", write_state(shape_pair(0.6, Complex(0, 0.8), {1, 0, 0}, {0, 2, 0}, 1.2, {0, 0, 0.3})));
  const Result r = run_cli({"galilean-check", f, "--samples", "50", "--seed", "3", "--mass", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LT(nlohmann::json::parse(r.out)["max_spectrum_deviation"].get<double>(), 1e-9);
}

TEST_F(CliTest, KernelGrid) {
  const std::string f = write_file("one.json", R"({"schema_version": 1, "n": 1, "d": 2, "components": [
    {"type": "gaussian_sum", "terms": [{"amplitude": 1, "center": [0, 0], "width": 1}]}]})");
  const Result r = run_cli({"kernel", f, "--axis", "1", "--grid", "-1:1:5"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "p,p_prime,re_f,im_f");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 25);
  EXPECT_NE(r.out.find("\n0.0,0.0,"), std::string::npos);
  EXPECT_EQ(run_cli({"kernel", f, "--axis", "2", "--grid", "-1:1:5"}).code, 1);
  EXPECT_EQ(run_cli({"kernel", f, "--grid", "-1:1"}).code, 1);
}

TEST_F(CliTest, RoundTripThroughMakeState) {
  ASSERT_EQ(run_cli({"make-state", "beam", "--c0", "0.6", "--c1", "0,0.8", "--k1", "0,0,1.5", "--s1", "2",
                     "--out", path("a.json")})
                .code,
            0);
  const Result first = run_cli({"analyze", path("a.json")});
  ASSERT_EQ(first.code, 0) << first.err;
  write_file("b.json", write_state(read_state_file(path("a.json"))));
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(run_cli({"analyze", path("b.json")}).out, first.out);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"sweep-q", "--q-steps", "zero"}).code, 1);
  EXPECT_EQ(run_cli({"sweep-q", "--c0", "1,2,3"}).code, 1);
  const Result help = run_cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("sweep-q"), std::string::npos);

  EXPECT_EQ(run_cli({"analyze", write_file("bad.json", "{\"n\": 2,")}).code, 2);
  EXPECT_EQ(run_cli({"analyze", write_file("bad2.json", R"({"schema_version": 1, "n": 1, "d": 1,
    "components": [{"type": "gaussian_sum", "terms": [{"amplitude": 1, "center": [0], "width": 0}]}]})")})
                .code,
            2);
  const Result unnorm = run_cli({"analyze", write_file("un.json", R"({"schema_version": 1, "n": 1, "d": 1,
    "components": [{"type": "gaussian_sum", "terms": [{"amplitude": 2, "center": [0], "width": 1}]}]})")});
  EXPECT_EQ(unnorm.code, 3);
  EXPECT_FALSE(unnorm.err.empty());
  EXPECT_EQ(run_cli({"sweep-q", "--c0", "1", "--c1", "1"}).code, 3);
  EXPECT_EQ(run_cli({"make-state", "shape", "--m0", "1", "--m1", "1", "--origin", "0"}).code, 3);
}

}  // namespace
}  // namespace cdent
