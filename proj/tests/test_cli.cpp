#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sawlab/cli.hpp"
#include "sawlab/io.hpp"

namespace fs = std::filesystem;
using sawlab::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sawlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "sawlab_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, CountTable) {
  const auto r = call({"count", "--family", "z:2", "--n", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["sigma"][6], "780");
}

TEST(Cli, CountSingleKindWithSpans) {
  const auto r = call({"count", "--family", "tree:3", "--kind", "bridge", "--n", "4", "--per-span"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["counts"][4], "16");
  EXPECT_EQ(j["by_span"][4][4], "16");
}

TEST(Cli, HumanAndCsv) {
  EXPECT_NE(call({"count", "--family", "hex", "--n", "3", "--human"}).out.find("sigma"), std::string::npos);
  const auto csv = call({"count", "--family", "hex", "--n", "3", "--csv"}).out;
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(Cli, CountBoundsVerifyRoundTrip) {
  const auto table = scratch("z2.json").string();
  ASSERT_EQ(call({"count", "--family", "z:2", "--n", "8", "--out", table}).code, 0);
  const auto b = call({"bounds", "--table", table, "--eta", "4"});
  ASSERT_EQ(b.code, 0) << b.err;
  const auto j = Json::parse(b.out);
  EXPECT_LE(j["lower"]["value"].get<double>(), j["upper"]["value"].get<double>());
  EXPECT_EQ(j["lower"]["rounding"], "down");
  EXPECT_TRUE(j["fekete"].get<bool>());
  EXPECT_EQ(call({"verify", "--table", table}).code, 0);

  // tamper with one count
  Json t;
  std::ifstream(table) >> t;
  t["sigma"][5] = "285";
  const auto bad = scratch("bad.json").string();
  std::ofstream(bad) << t.dump();
  const auto v = call({"verify", "--table", bad});
  EXPECT_EQ(v.code, 4);
  EXPECT_FALSE(v.err.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"count", "--family", "z:2"}).code, 2);
  EXPECT_EQ(call({"count", "--family", "q:1", "--n", "3"}).code, 2);
  EXPECT_EQ(call({"count", "--family", "z:2", "--n", "3", "--kind", "loops"}).code, 2);
  EXPECT_EQ(call({"bounds", "--table", scratch("missing.json").string()}).code, 2);
  EXPECT_EQ(call({"decompose", "--family", "z:2", "--walk", "[[0,0],[0,1]]"}).code, 2);
  EXPECT_EQ(call({"quotient", "--family", "z:2", "--shifts", "1,1"}).code, 3);
}

TEST(Cli, Decompose) {
  const auto r = call({"decompose", "--family", "z:2", "--walk", "[[0,0],[1,0],[2,0],[2,1],[1,1]]"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["spans"], Json::parse("[2,1]"));
  EXPECT_EQ(j["breaks"], Json::parse("[3,4]"));
}

TEST(Cli, ValidateAndSynth) {
  EXPECT_EQ(call({"validate-height", "--family", "sqoct", "--radius", "4"}).code, 0);
  const auto q = scratch("q.json").string();
  ASSERT_EQ(call({"quotient", "--family", "z:2", "--shifts", "2,0;0,2", "--out", q}).code, 0);
  const auto s = call({"synth-height", "--quotient", q, "--radius", "4", "--trials", "50"});
  ASSERT_EQ(s.code, 0) << s.err;
  const auto j = Json::parse(s.out);
  EXPECT_TRUE(j["equations_hold"].get<bool>());
  EXPECT_TRUE(j["lifted"]["validation"]["ok"].get<bool>());
}

TEST(Cli, Locality) {
  const auto r = call({"locality", "--a", "z:2", "--b", "zcyl:2:0,6", "--n", "6", "--cap", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["similarity"]["K"], 2);
}

TEST(Cli, RunConfig) {
  const auto cfg = scratch("cfg.json").string();
  std::ofstream(cfg) << R"({"command": "count", "family": "hex", "n_max": 5, "jobs": 2})";
  const auto r = call({"run", "--config", cfg});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, call({"count", "--family", "hex", "--n", "5"}).out);
  std::ofstream(cfg) << R"({"family": "hex"})";
  EXPECT_EQ(call({"run", "--config", cfg}).code, 2);
}

TEST(Cli, JobsDoNotChangeOutput) {
  const auto a = call({"count", "--family", "z:3", "--n", "6", "--jobs", "1"});
  const auto b = call({"count", "--family", "z:3", "--n", "6", "--jobs", "8"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, BinaryExitCode) {
  const std::string cmd = std::string(SAWLAB_EXE) + " count --family z:2 > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 2);
}
