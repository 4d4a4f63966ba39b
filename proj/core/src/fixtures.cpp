#include "gcluster/fixtures.hpp"

#include <algorithm>

#include "gcluster/io.hpp"

namespace gcluster {

namespace {

constexpr const char* kEx21Seed = R"({
  "v": 1, "kind": "seed",
  "ambient": ["y1", "y2", "y3", "y4"],
  "mutable": 1,
  "variables": ["y1", "y2", "y3", "y1*y4 - y2*y3"],
  "arrows": [[2, 1], [3, 1], [1, 4]]
})";

constexpr const char* kEx21Map = R"({
  "v": 1, "kind": "map",
  "source": ["x1", "x2", "x3", "x4", "x5"],
  "target": ["y1", "y2", "y3", "y4"],
  "h": [{"label": "h", "poly": "x5"}],
  "images": [{"num": "x1", "kappa": {"h": 1}}, "x2", "x3", "x4"]
})";

constexpr const char* kEx22Map = R"({
  "v": 1, "kind": "map",
  "source": ["x1", "x2", "x3", "x4", "x5"],
  "target": ["y1", "y2", "y3", "y4"],
  "h": [{"label": "h", "poly": "x5"}],
  "images": ["x1", {"num": "x2", "kappa": {"h": 1}}, "x3", "x4"]
})";

constexpr const char* kEx23Seed = R"({
  "v": 1, "kind": "seed",
  "ambient": ["y1", "y2", "y3"],
  "mutable": 2,
  "variables": ["y1", "y1^2 + y1*y2 - 1", "y3*(y1^2 + y1*y2 - 1)^2 - y1 - y2"],
  "arrows": [[1, 2], [3, 2]]
})";

constexpr const char* kEx23Map = R"({
  "v": 1, "kind": "map",
  "source": ["x1", "x2", "x3", "x4"],
  "target": ["y1", "y2", "y3"],
  "h": [{"label": "h", "poly": "x4"}],
  "images": ["1 + x1*x4", "1 + x2*x4", "x3*x4"]
})";

constexpr const char* kEx31Seed = R"({
  "v": 1, "kind": "seed",
  "ambient": ["y1", "y2", "y3"],
  "mutable": 1,
  "variables": ["y1", "y1^2 + y1*y2 - y3", "y3"],
  "arrows": [[2, 1], [1, 3]]
})";

constexpr const char* kEx31Map = R"({
  "v": 1, "kind": "map",
  "source": ["x1", "x2", "x3", "x4"],
  "target": ["y1", "y2", "y3"],
  "h": [{"label": "h", "poly": "x4"}],
  "images": ["x1", "x2*x4", "x3*x4"]
})";

constexpr const char* kGc3Seed = R"({
  "v": 1, "kind": "seed",
  "ambient": ["x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", "x33"],
  "distinguished": [{"label": "det", "kind": "G",
    "poly": "x11*x22*x33 - x11*x23*x32 - x12*x21*x33 + x12*x23*x31 + x13*x21*x32 - x13*x22*x31"}],
  "mutable": 5,
  "multiplicities": [2, 1, 1, 1, 1],
  "variables": [
    "x11*x21*x33^3 - x11*x22*x32*x33^2 - x11*x23*x31*x33^2 + x11*x23*x32^2*x33 + x12*x22*x31*x33^2 - x12*x23*x31*x32*x33 - x13*x21*x31*x33^2 + x13*x23*x31^2*x33 - x21^2*x23*x33^2 + x21*x22*x23*x32*x33 + 2*x21*x23^2*x31*x33 - x21*x23^2*x32^2 - x22^2*x23*x31*x33 + x22*x23^2*x31*x32 - x23^3*x31^2",
    "-x21^2*x33^2 + x21*x22*x32*x33 + 2*x21*x23*x31*x33 - x21*x23*x32^2 - x22^2*x31*x33 + x22*x23*x31*x32 - x23^2*x31^2",
    "-x21*x33^2 + x22*x32*x33 + x23*x31*x33 - x23*x32^2",
    "x22*x33 - x23*x32",
    "x33",
    "x31",
    "x13",
    {"num": "1", "lambda": {"det": -1}},
    "x11^2*x33^2 - x11*x12*x32*x33 - 2*x11*x13*x31*x33 + x11*x13*x32^2 - x11*x21*x23*x33 + x11*x23^2*x31 + x12^2*x31*x33 - x12*x13*x31*x32 + x12*x21*x23*x32 - x12*x22*x23*x31 + x13^2*x31^2 + x13*x21^2*x33 - x13*x21*x22*x32 - x13*x21*x23*x31 + x13*x22^2*x31"
  ],
  "arrows": [[1, 2], [1, 7], [5, 1], [8, 1, 2], [6, 1], [4, 2], [2, 3], [2, 5], [2, 8], [5, 3],
             [3, 4, 2], [3, 6], [4, 5, 2]],
  "strings": [
    ["1", {"num": "x11^2*x33^2 - x11*x12*x32*x33 - 2*x11*x13*x31*x33 + x11*x13*x32^2 - x11*x21*x23*x33 + x11*x23^2*x31 + x12^2*x31*x33 - x12*x13*x31*x32 + x12*x21*x23*x32 - x12*x22*x23*x31 + x13^2*x31^2 + x13*x21^2*x33 - x13*x21*x22*x32 - x13*x21*x23*x31 + x13*x22^2*x31", "lambda": {"det": 1}}, "1"],
    ["1", "1"], ["1", "1"], ["1", "1"], ["1", "1"]
  ]
})";

constexpr const char* kGl3Seed = R"({
  "v": 1, "kind": "seed",
  "ambient": ["y11", "y12", "y13", "y21", "y22", "y23", "y31", "y32", "y33"],
  "distinguished": [{"label": "g", "kind": "G", "poly": "y12*y23 - y13*y22"}],
  "mutable": 4,
  "variables": [
    "y33",
    "y32",
    {"num": "y23", "lambda": {"g": 1}},
    {"num": "y22*y33 - y23*y32", "lambda": {"g": 1}},
    "y13",
    "y11*y22*y33 - y11*y23*y32 - y12*y21*y33 + y12*y23*y31 + y13*y21*y32 - y13*y22*y31",
    "y21*y32 - y22*y31",
    "y31",
    {"num": "1", "lambda": {"g": -1}}
  ],
  "arrows": [[1, 2], [1, 3], [4, 1], [7, 2], [2, 4], [2, 8], [2, 9], [3, 4], [3, 5], [6, 4], [4, 7]]
})";

constexpr const char* kGl3SecondMap = R"({
  "v": 1, "kind": "map",
  "source": ["x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", "x33", "z"],
  "target": ["y11", "y12", "y13", "y21", "y22", "y23", "y31", "y32", "y33"],
  "h": [{"label": "z", "poly": "z"}],
  "images": ["x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", {"num": "x33", "kappa": {"z": 1}}]
})";

std::vector<Fixture> make_fixtures() {
  return {
      {"ex2_1", "rank-one structure on 2x2 matrices pulled back along y1 -> x1/x5", kEx21Seed, kEx21Map,
       ArrowConvention::kStandard},
      {"ex2_2", "same structure pulled back along y2 -> x2/x5; incoherent", kEx21Seed, kEx22Map,
       ArrowConvention::kStandard},
      {"ex2_3", "rank-two structure whose pullback loses coherence after one mutation", kEx23Seed, kEx23Map,
       ArrowConvention::kStandard},
      {"ex3_1", "coherent relation with a dependent family on {x4 = 0}", kEx31Seed, kEx31Map,
       ArrowConvention::kStandard},
      {"gc3", "generalized structure on GL3 with a multiplicity-2 vertex and det distinguished", kGc3Seed, "",
       ArrowConvention::kMirrored},
      {"gl3_lift", "GL3 structure lifted from the complement of {g = 0}", kGl3Seed, "",
       ArrowConvention::kStandard},
  };
}

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures = make_fixtures();
  return fixtures;
}

}  // namespace

Seed Fixture::seed() const { return seed_from_json(seed_json); }

std::optional<AmbientMap> Fixture::map(const Seed& s) const {
  if (map_json.empty()) return std::nullopt;
  return map_from_json(map_json, s.dist());
}

PullbackSeed Fixture::pullback() const {
  Seed s = seed();
  auto m = map(s);
  return build_pullback_seed(s, m ? *m : AmbientMap::identity(s.ambient(), s.dist()), convention);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : all_fixtures()) out.push_back(f.name);
  return out;
}

std::vector<std::string> runnable_fixture_names() {
  auto out = fixture_names();
  out.push_back("hulls_4_3");
  return out;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : all_fixtures())
    if (f.name == name) return f;
  throw LookupError("unknown fixture '" + std::string(name) + "'");
}

Seed gl3_second_seed() { return fixture("gl3_lift").pullback().to_seed(); }

AmbientMap gl3_second_map(const Seed& second_seed) { return map_from_json(kGl3SecondMap, second_seed.dist()); }

std::vector<HullCase> hull_cases() {
  auto chi = [](std::vector<Rational> inner) {
    inner.insert(inner.begin(), Rational(0));
    inner.push_back(Rational(0));
    return inner;
  };
  std::vector<Rational> c1, c2;
  for (int r = 1; r < 6; ++r) {
    c1.push_back(Rational(1) - Rational(r, 6));
    c2.push_back(Rational(1) + Rational((2 * r) % 6, 6));
  }
  auto p1 = make_profile(chi(c1), Rational(1, 6));
  auto p2 = make_profile(chi(c2));
  auto p3 = make_profile({0, 1, 1, 3, 1, 3, 0});
  return {
      {"profile i, slope -1/6", p1, Rational(-1, 6), {1, 0}, Provenance::kPaper},
      {"profile i, slope -7/6", p1, Rational(-7, 6), {7, 0}, Provenance::kDerived},
      {"profile ii, slope 1/3", p2, Rational(1, 3), {1, 3}, Provenance::kPaper},
      {"profile ii, slope -2/3", p2, Rational(-2, 3), {5, 1}, Provenance::kPaper},
      {"profile iii, slope 0", p3, Rational(0), {3, 3}, Provenance::kPaper},
      {"profile iii, slope -1", p3, Rational(-1), {8, 2}, Provenance::kPaper},
      {"profile iii, slope -2", p3, Rational(-2), {13, 1}, Provenance::kPaper},
  };
}

namespace {

PoissonStructure quadratic_bracket(const VarTablePtr& t, const std::vector<std::tuple<int, int, std::string>>& e) {
  PoissonStructure p(t);
  for (const auto& [i, j, w] : e) p.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), parse_poly(w, t));
  return p;
}

}  // namespace

PoissonStructure ex2_1_target_bracket(const VarTablePtr& y) {
  return quadratic_bracket(y, {{0, 1, "y1*y2"}, {0, 2, "y1*y3"}, {1, 3, "y2*y4"}, {2, 3, "y3*y4"},
                               {0, 3, "2*y2*y3"}});
}

PoissonStructure ex2_1_source_bracket(const VarTablePtr& x) {
  return quadratic_bracket(x, {{0, 1, "x1*x2"}, {0, 2, "x1*x3"}, {1, 3, "x2*x4"}, {2, 3, "x3*x4"},
                               {0, 3, "2*x2*x3*x5"}});
}

std::vector<LaurentCertificate> positive_certificates() {
  std::vector<LaurentCertificate> out;
  {
    auto ps = mutate_pullback(fixture("ex2_1").pullback(), 0);
    Seed s = ps.to_seed();
    out.push_back({s, parse_poly("x4", s.ambient()), {{1, {1, 0, 0, 0, 0}}}, true});
  }
  {
    Seed s = fixture("ex2_1").seed();
    out.push_back({s, parse_poly("y4", s.ambient()), {{1, {-1, 0, 0, 1}}, {1, {-1, 1, 1, 0}}}, true});
  }
  {
    Seed s = fixture("ex2_3").seed();
    out.push_back({s, parse_poly("y2", s.ambient()), {{1, {-1, 1, 0}}, {1, {-1, 0, 0}}, {-1, {1, 0, 0}}}, true});
  }
  return out;
}

}  // namespace gcluster
