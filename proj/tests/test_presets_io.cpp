#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "ssf/error.hpp"
#include "ssf/io.hpp"
#include "ssf/presets.hpp"
#include "support.hpp"

using namespace ssf;

TEST(Presets, ParseSpellings) {
  const auto id = parse_preset("cantor_family:1/3,0.1");
  EXPECT_EQ(id.kind, PresetKind::cantor_family);
  ASSERT_EQ(id.args.size(), 2u);
  EXPECT_DOUBLE_EQ(id.args[0], 1.0 / 3);
  const auto st = parse_preset("step:0,0.5,1;2,3");
  EXPECT_EQ(st.args.size(), 3u);
  EXPECT_EQ(st.values.size(), 2u);
  EXPECT_EQ(parse_preset("identity2").kind, PresetKind::identity2);
  EXPECT_THROW(parse_preset("nope"), Error);
  EXPECT_EQ(parse_preset(to_string(id)).args, id.args);
}

TEST(Presets, RangeChecks) {
  EXPECT_THROW(presets::characteristic(0.75, 0.25), Error);
  EXPECT_THROW(presets::cantor_family(0.6, 0.0), Error);
  EXPECT_THROW(presets::bernoulli(1.5), Error);
  EXPECT_THROW(presets::step({0.0, 0.5}, {1.0}), Error);
}

TEST(Presets, AllBuildAndValidate) {
  for (const auto& name : preset_names()) {
    std::string spec = name;
    if (name == "characteristic") spec += ":1/4,3/4";
    if (name == "step") spec += ":0,0.5,1;2,3";
    if (name == "cantor_family") spec += ":1/3,0";
    if (name == "counterexample") spec += ":0.5";
    if (name == "bernoulli") spec += ":1/3";
    if (name == "uniform") spec += ":0.3,0.7";
    EXPECT_NO_THROW(make_preset(parse_preset(spec))) << spec;
  }
}

TEST(Presets, IdentityFamilies) {
  for (const auto& sys : {presets::identity2(), presets::identity3(), presets::uniform({0.1, 0.6, 0.3})}) {
    const auto anchors = boundary_anchors(sys);
    EXPECT_NEAR(anchors.f0, 0.0, 1e-15);
    EXPECT_NEAR(anchors.f1, 1.0, 1e-15);
  }
}

TEST(Io, ParamsRoundTripExactly) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = check::random_params(rng, 2 + trial % 6, 0.9);
    std::stringstream ss;
    write_params(ss, p, "random");
    const auto q = read_params(ss);
    EXPECT_EQ(p.a, q.a);
    EXPECT_EQ(p.c, q.c);
    EXPECT_EQ(p.d, q.d);
    EXPECT_EQ(p.beta, q.beta);
  }
}

TEST(Io, RejectsMalformedDocuments) {
  std::stringstream bad_json("{ not json");
  EXPECT_THROW(read_params(bad_json), Error);
  std::stringstream missing(R"({"a":[0.5,0.5],"c":[0,0],"d":[0,0]})");
  EXPECT_THROW(read_params(missing), Error);
  std::stringstream wrong_n(R"({"n":3,"a":[0.5,0.5],"c":[0,0],"d":[0,0],"beta":[0,0]})");
  EXPECT_THROW(read_params(wrong_n), Error);
}

TEST(Io, BreakpointCsv) {
  std::stringstream ss;
  write_breakpoint_csv(ss, PiecewiseLinearFn({0.0, 0.5, 1.0}, {0.0, 2.0}, {1.0, 3.0}));
  std::string header, first, mid;
  std::getline(ss, header);
  std::getline(ss, first);
  std::getline(ss, mid);
  EXPECT_EQ(header, "x,left,right");
  EXPECT_EQ(first, "0,0,0");
  EXPECT_EQ(mid, "0.5,1,2");
}

TEST(Io, JsonReports) {
  const auto j = to_json(norm_bound(presets::cantor_family(1.0 / 3, 0.0), Exponent(1)));
  EXPECT_DOUBLE_EQ(j.at("bound").get<double>(), 0.5);
  const auto v = to_json(continuity_check(presets::characteristic(0.25, 0.75)));
  EXPECT_EQ(v.at("verdict"), "fails");
  EXPECT_EQ(v.at("witnesses").size(), 2u);
}

TEST(Io, AtomicWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "ssf_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.txt").string();
  std::stringstream unused;
  write_atomically(path, "hello\n", unused);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "hello");
  EXPECT_TRUE(unused.str().empty());
  std::stringstream fallback;
  write_atomically("-", "x", fallback);
  EXPECT_EQ(fallback.str(), "x");
  std::filesystem::remove_all(dir);
}
