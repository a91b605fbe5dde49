#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "ssf/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ssf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ValidateReportsFactors) {
  const auto r = run({"validate", "--preset", "cantor_family:1/3,0", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.dump().find("0.5") != std::string::npos);
}

TEST(Cli, PresetRoundTripThroughFile) {
  const auto dir = std::filesystem::temp_directory_path() / "ssf_cli_test";
  std::filesystem::create_directories(dir);
  const auto file = (dir / "bern.json").string();
  ASSERT_EQ(run({"preset", "bernoulli:1/3", "-o", file}).code, 0);
  const auto r = run({"eval", file, "--code", "2", "--end", "left"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0.333333"), std::string::npos) << r.out;
  std::filesystem::remove_all(dir);
}

TEST(Cli, EvalCantor) {
  const auto r = run({"eval", "--preset", "cantor_family:1/3,0", "--code", "1,2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0.25"), std::string::npos) << r.out;
}

TEST(Cli, SolveWritesCertifiedCsv) {
  const auto r = run({"solve", "--preset", "cantor_family:1/3,0", "--p", "1", "--target-error", "1e-6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# certified_error="), std::string::npos) << r.out.substr(0, 200);
  EXPECT_NE(r.out.find("x,left,right"), std::string::npos);
}

TEST(Cli, StrictCheckFailsOnJumps) {
  EXPECT_EQ(run({"check", "--preset", "characteristic:1/4,3/4"}).code, 0);
  EXPECT_EQ(run({"check", "--preset", "characteristic:1/4,3/4", "--strict"}).code, 1);
  EXPECT_EQ(run({"check", "--preset", "cantor_family:1/3,0", "--strict"}).code, 0);
}

TEST(Cli, VariationReport) {
  const auto r = run({"variation", "--preset", "cantor_family:1/3,0.1", "--depth", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("unbounded variation"), std::string::npos);
  EXPECT_NE(r.out.find("5.3782"), std::string::npos);
}

TEST(Cli, MeasureSamplesAreReproducible) {
  const auto a = run({"measure", "--preset", "bernoulli:1/3", "--samples", "100", "--seed", "5", "--depth", "12"});
  const auto b = run({"measure", "--preset", "bernoulli:1/3", "--samples", "100", "--seed", "5", "--depth", "12"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"measure", "--preset", "cantor_family:1/3,0"}).code, 2);
  EXPECT_EQ(run({"measure", "--preset", "cantor_family:1/3,0", "--collapse", "--depth", "3"}).code, 0);
}

TEST(Cli, NormsAndRender) {
  const auto n = run({"norms", "--preset", "cantor_family:1/3,0", "--p", "1,inf", "--json"});
  ASSERT_EQ(n.code, 0) << n.err;
  EXPECT_TRUE(nlohmann::json::accept(n.out));
  const auto r = run({"render", "--preset", "identity2", "--samples", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0.75"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  const auto bad = run({"validate", "--preset", "cantor_family:0.9,0"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("BadPresetParams"), std::string::npos);
  EXPECT_EQ(run({"validate", "/nonexistent/params.json"}).code, 2);
  EXPECT_EQ(run({"eval", "--preset", "identity2", "--code", "1,5"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"validate", "--preset", "identity2", "--p", "0.5"}).code, 2);
}
