#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = gcluster::tools::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return std::string(GCLUSTER_DATA_DIR) + "/" + f; }

TEST(Cli, MutatePrintsLiftedRelation) {
  auto r = cli({"mutate", "--fixture", "ex2_1", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("f1*f1' = f2*f3*h + f4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("f1' = x4"), std::string::npos) << r.out;
}

TEST(Cli, MutateFromFiles) {
  auto r = cli({"mutate", "--seed", data("ex2_1.seed.json"), "--map", data("ex2_1.map.json"), "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("f1' = x4"), std::string::npos);
}

TEST(Cli, IncoherentMutationExitsOne) {
  EXPECT_EQ(cli({"mutate", "--fixture", "ex2_2", "1"}).code, 1);
}

TEST(Cli, PullbackDepthFindsViolation) {
  auto base = std::vector<std::string>{"pullback", "--seed", data("ex2_3.seed.json"), "--map", data("ex2_3.map.json")};
  EXPECT_EQ(cli(base).code, 0);
  base.insert(base.end(), {"--depth", "1"});
  EXPECT_EQ(cli(base).code, 1);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(cli({"mutate", "--seed", "/nonexistent/seed.json", "1"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"mutate", "--fixture", "nope", "1"}).code, 2);
  EXPECT_EQ(cli({"mutate", "--fixture", "ex2_1", "5"}).code, 2);
  EXPECT_EQ(cli({"hull"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(cli({"--help"}).code, 0); }

TEST(Cli, HullFromChi) {
  auto r = cli({"hull", "--chi", "0,1,1,3,1,3,0", "--slope", "-1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("(8, 2)"), std::string::npos) << r.out;
}

TEST(Cli, DiscrepancyTable) {
  auto r = cli({"discrepancy", "--fixture", "gl3_lift"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(0, -1, -1, 1)"), std::string::npos) << r.out;
}

TEST(Cli, VerifyCommands) {
  EXPECT_EQ(cli({"verify", "--fixture", "ex2_1"}).code, 0);
  EXPECT_EQ(cli({"verify", "--fixture", "gc3"}).code, 1);
  EXPECT_EQ(cli({"verify", "--certificate", data("certificate1.json")}).code, 0);
  EXPECT_EQ(cli({"verify", "--independence", data("ex3_1.seed.json"), "4", "--map", data("ex3_1.map.json")}).code, 1);
  EXPECT_EQ(cli({"poisson-check", "--fixture", "ex2_1", "--bracket", data("ex2_1.source_bracket.json")}).code, 0);
  EXPECT_EQ(cli({"poisson-check", "--fixture", "ex2_1", "--bracket", data("ex2_1.bracket.json")}).code, 2);
}

TEST(Cli, ExploreCountsSeeds) {
  auto r = cli({"explore", "--fixture", "ex2_1", "--depth", "4", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"seeds\": 2"), std::string::npos) << r.out;
}

TEST(Cli, FixtureWritesFiles) {
  auto dir = std::filesystem::temp_directory_path() / "gcluster_cli_test";
  std::filesystem::remove_all(dir);
  EXPECT_EQ(cli({"fixture", "ex2_1", "--out", dir.string()}).code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "ex2_1.seed.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "ex2_1.map.json"));
  std::filesystem::remove_all(dir);
}

}  // namespace
