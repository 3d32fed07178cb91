#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "svinv/cli.hpp"
#include "svinv/serialize.hpp"

using namespace svinv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = execute_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("svinv_test_" + name);
  std::ofstream(path) << content;
  return path;
}

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST(Cli, Bracket) {
  const auto r = run({"bracket", "--lambda", "-2", "--mu", "0", "--s", "0", "L(1)", "Y(-1)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(-1/2)*Y(0)\n");
  const auto h = run({"bracket", "--lambda", "-2", "--mu", "1/2", "--s", "1/2", "L(1)", "Y(1/2)"});
  EXPECT_EQ(h.out, "(3/2)*Y(3/2)\n");
}

TEST(Cli, UsageErrorsNameTheToken) {
  const auto parity = run({"bracket", "--lambda", "-2", "--mu", "0", "--s", "0", "Y(1/2)", "L(1)"});
  EXPECT_EQ(parity.code, 2);
  EXPECT_NE(parity.err.find("Y(1/2)"), std::string::npos);

  const auto rational = run({"classify", "--lambda", "1/0", "--mu", "0", "--s", "0"});
  EXPECT_EQ(rational.code, 2);
  EXPECT_NE(rational.err.find("1/0"), std::string::npos);

  const auto window = run({"solve-inv", "--lambda", "-2", "--mu", "0", "--s", "0", "--window", "4", "--core", "3"});
  EXPECT_EQ(window.code, 2);
  EXPECT_NE(window.err.find("3"), std::string::npos);

  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"classify", "--lambda", "0"}).code, 2);
  EXPECT_EQ(run({"classify", "--lambda", "0", "--mu", "0", "--s", "0", "--convention", "other"}).code, 2);
}

TEST(Cli, ClassifyBothConventions) {
  const auto printed = run({"classify", "--lambda", "-1", "--mu", "0", "--s", "0", "--convention", "printed"});
  ASSERT_EQ(printed.code, 0);
  EXPECT_EQ(Json::parse(printed.out)["dimension"], 1);

  const auto lemma = run({"classify", "--lambda", "-1", "--mu", "0", "--s", "0", "--convention", "lemma"});
  ASSERT_EQ(lemma.code, 0);
  const Json j = Json::parse(lemma.out);
  EXPECT_EQ(j["dimension"], 0);
  EXPECT_EQ(j["discrepancy"]["witness"]["triple"], Json::array({"L(1)", "L(-1)", "M(0)"}));
  EXPECT_EQ(j["discrepancy"]["witness"]["residual"], "-2");
}

TEST(Cli, CheckInvarianceExitCodes) {
  const auto ok = run({"check-invariance", "--lambda", "-2", "--mu", "1/2", "--s", "0", "--window", "6",
                       "--core", "3", "--convention", "lemma"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(Json::parse(ok.out)["violation_count"], 0);
  const auto bad = run({"check-invariance", "--lambda", "-1", "--mu", "0", "--s", "0", "--window", "6",
                        "--core", "3", "--convention", "printed"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_GT(Json::parse(bad.out)["violation_count"].get<int>(), 0);
}

TEST(Cli, CheckInvarianceReadsFormFile) {
  const auto cf = run({"closed-form", "--lambda", "-5", "--mu", "0", "--s", "0", "--window", "4", "--core",
                       "2", "--tag", "C"});
  ASSERT_EQ(cf.code, 0);
  const auto path = temp_file("form.json", cf.out);
  const auto r = run({"check-invariance", "--lambda", "-5", "--mu", "0", "--s", "0", "--window", "4",
                      "--core", "2", "--form", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rad = run({"radical", "--lambda", "-5", "--mu", "0", "--s", "0", "--window", "4", "--core", "2",
                        "--form", path.string()});
  EXPECT_EQ(rad.code, 0);
  EXPECT_EQ(Json::parse(rad.out)["dimension"], 27 - 18);
}

TEST(Cli, SolveInvExitCodes) {
  const std::vector<std::string> base{"solve-inv", "--lambda", "-1", "--mu", "0", "--s", "0", "--window", "6",
                                      "--core", "3"};
  auto lemma = base;
  EXPECT_EQ(run(lemma).code, 0);
  auto printed = base;
  printed.insert(printed.end(), {"--convention", "printed"});
  EXPECT_EQ(run(printed).code, 1);
  auto csv = base;
  csv.insert(csv.end(), {"--format", "csv", "--weight-filter", "off"});
  const auto r = run(csv);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 2u);
}

TEST(Cli, Cohomology) {
  const auto r = run({"cohomology", "--lambda", "0", "--mu", "1/3", "--s", "0", "--window", "4", "--core", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["dims"].size(), 7u);
}

TEST(Cli, EmptySweepAndOutFile) {
  const auto cfg = temp_file("empty.json", R"({"points": []})");
  const auto out = std::filesystem::temp_directory_path() / "svinv_test_empty.csv";
  const auto r = run({"sweep", "--config", cfg.string(), "--out", out.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "lambda,mu,s,M,C,dim_solver,dim_printed,dim_lemma,stabilized,match,h2,hl2,xi_image\n");
}

TEST(Cli, SweepIsDeterministicAcrossJobCounts) {
  const auto cfg = temp_file("small.json", R"({"grid":{"lambda":["-3","-2","-1"],"mu":["0","1/2"],"s":["0","1/2"]},
                                                "window":4,"core":2})");
  const auto one = run({"sweep", "--config", cfg.string(), "--jobs", "1"});
  const auto four = run({"sweep", "--config", cfg.string(), "--jobs", "4"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(count_lines(one.out), 13u);
  const auto json = run({"sweep", "--config", cfg.string(), "--format", "json"});
  EXPECT_EQ(Json::parse(json.out).size(), 12u);
}

TEST(Cli, SweepRejectsBadConfig) {
  const auto cfg = temp_file("bad.json", R"({"points":[{"lambda":"0","mu":"0","s":"1/3"}]})");
  const auto r = run({"sweep", "--config", cfg.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("1/3"), std::string::npos);
  EXPECT_EQ(run({"sweep", "--config", "/nonexistent/cfg.json"}).code, 2);
}

TEST(Cli, FixtureGridSweepHasOneRowPerPoint) {
  const auto cfg = temp_file("grid.json", R"({"grid":{"lambda":["-5","-4","-3","-2","-1","0","1"],
                                               "mu":["-1","-1/2","0","1/3","1/2","1","3/2"],
                                               "s":["0","1/2"]},"window":4,"core":2})");
  const auto r = run({"sweep", "--config", cfg.string(), "--jobs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out), 99u);
}
