#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gcluster/errors.hpp"
#include "gcluster/fixtures.hpp"
#include "gcluster/io.hpp"

using namespace gcluster;
namespace fs = std::filesystem;

namespace {

std::string chomp(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return chomp(ss.str());
}

fs::path data_dir() { return GCLUSTER_DATA_DIR; }

std::string round_trip(const fs::path& p) {
  std::string text = slurp(p);
  std::string kind = document_kind(text);
  if (kind == "seed") return seed_to_json(seed_from_json(text));
  if (kind == "pullback_seed") return pullback_seed_to_json(pullback_seed_from_json(text));
  if (kind == "bracket") return bracket_to_json(bracket_from_json(text));
  if (kind == "certificate") return certificate_to_json(certificate_from_json(text));
  if (kind == "map") {
    std::string stem = p.filename().string();
    stem = stem.substr(0, stem.find('.'));
    Seed s = seed_from_json(slurp(data_dir() / (stem + ".seed.json")));
    return map_to_json(map_from_json(text, s.dist()));
  }
  throw std::runtime_error("unexpected kind " + kind);
}

TEST(Io, DataFilesRoundTripByteExact) {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(data_dir())) {
    if (entry.path().extension() != ".json") continue;
    ++seen;
    EXPECT_EQ(chomp(round_trip(entry.path())), slurp(entry.path())) << entry.path();
  }
  EXPECT_GE(seen, 17);
}

TEST(Io, PullbackSeedRoundTrip) {
  for (const auto& name : fixture_names()) {
    auto ps = fixture(name).pullback();
    std::string text = pullback_seed_to_json(ps);
    auto back = pullback_seed_from_json(text);
    EXPECT_EQ(pullback_key(back), pullback_key(ps)) << name;
    EXPECT_EQ(pullback_seed_to_json(back), text) << name;
  }
}

TEST(Io, MalformedDocumentsAreRejected) {
  EXPECT_THROW(seed_from_json("{"), ParseError);
  EXPECT_THROW(seed_from_json(R"({"v": 1, "kind": "bracket"})"), ParseError);
  EXPECT_THROW(document_kind("[]"), ParseError);
  std::string text = seed_to_json(fixture("ex2_1").seed());
  auto pos = text.find("y1*y4");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 5, "y1*w4");
  EXPECT_THROW(seed_from_json(text), ParseError);
}

TEST(Io, VersionIsChecked) {
  std::string text = seed_to_json(fixture("ex2_1").seed());
  auto pos = text.find("\"v\": 1");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 6, "\"v\": 9");
  EXPECT_THROW(seed_from_json(text), ParseError);
}

}  // namespace
