#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcluster/cluster.hpp"
#include "gcluster/hull.hpp"
#include "gcluster/poisson.hpp"
#include "gcluster/pullback.hpp"
#include "gcluster/verify.hpp"

namespace gcluster {

// Built-in worked examples: a target seed, optionally a map to pull it back along.
struct Fixture {
  std::string name;
  std::string description;
  std::string seed_json;
  std::string map_json;  // empty when the fixture has no map
  ArrowConvention convention = ArrowConvention::kStandard;

  Seed seed() const;
  std::optional<AmbientMap> map(const Seed& s) const;
  // Pullback along the map, or along the identity when there is none.
  PullbackSeed pullback() const;
};

// Fixtures with seed data: ex2_1, ex2_2, ex2_3, ex3_1, gc3, gl3_lift.
std::vector<std::string> fixture_names();
// All names accepted by run_fixture (adds hulls_4_3).
std::vector<std::string> runnable_fixture_names();
// Throws LookupError.
const Fixture& fixture(std::string_view name);

// Second lift of the GL3 example: the first lift as a plain seed, pulled back along y33 -> x33/z.
Seed gl3_second_seed();
AmbientMap gl3_second_map(const Seed& second_seed);

struct HullCase {
  std::string label;
  HullProfile profile;
  Rational slope;
  MuPair expected;
  Provenance tag;
};
std::vector<HullCase> hull_cases();

// Standard bracket on 2x2 matrices y1 y2 / y3 y4, and its lift to the ex2_1 source with x5 a Casimir.
PoissonStructure ex2_1_target_bracket(const VarTablePtr& y);
PoissonStructure ex2_1_source_bracket(const VarTablePtr& x);

// Laurent certificates expected to verify.
std::vector<LaurentCertificate> positive_certificates();

}  // namespace gcluster
