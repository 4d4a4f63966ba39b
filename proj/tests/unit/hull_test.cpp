#include <gtest/gtest.h>

#include <algorithm>

#include "gcluster/errors.hpp"
#include "gcluster/fixtures.hpp"

using namespace gcluster;

namespace {

using Hull = std::vector<std::pair<int, Rational>>;

TEST(Hull, UpperHullDropsInteriorPoints) {
  auto p = make_profile({0, 1, 1, 3, 1, 3, 0});
  EXPECT_EQ(upper_hull(p), (Hull{{0, 0}, {3, 3}, {5, 3}, {6, 0}}));
  EXPECT_EQ(p.d, 6);
}

TEST(Hull, SupportArrowsForTabulatedCases) {
  for (const auto& c : hull_cases()) EXPECT_EQ(support_arrows(c.profile, c.slope), c.expected) << c.label;
}

TEST(Hull, TouchPointsOfSupportLine) {
  auto p = make_profile({0, 1, 1, 3, 1, 3, 0});
  EXPECT_EQ(touch_points(p, 0), (std::vector<int>{3, 5}));
  EXPECT_EQ(touch_points(p, -1), (std::vector<int>{5}));
}

TEST(Hull, SupportOrdinatesAreTheBruteForceMaximum) {
  auto p = make_profile({0, Rational(1, 2), 3, -1, Rational(5, 3), 0});
  for (int num = -12; num <= 12; ++num) {
    Rational s(num, 4);
    s.canonicalize();
    Rational top = p.chi[0];
    for (int r = 0; r <= p.d; ++r) top = std::max(top, Rational(p.chi[static_cast<std::size_t>(r)] - s * r));
    EXPECT_EQ(support_arrows(p, s), (MuPair{top, top + s * p.d})) << s.get_str();
  }
}

TEST(Hull, NaturalPairOnGc3) {
  auto ps = fixture("gc3").pullback();
  auto p = compute_profile(ps, 0, 0);
  EXPECT_EQ(p.d, 2);
  EXPECT_EQ(p.tau, 1);
  EXPECT_EQ(natural_pair(p), (MuPair{2, 0}));
  EXPECT_TRUE(natural_pair(p).is_arrow_data());
  auto mu = mu_vector(p, natural_pair(p));
  EXPECT_EQ(*std::min_element(mu.begin(), mu.end()), 0);
}

TEST(Hull, ArrowDataRequiresNonNegativeIntegers) {
  EXPECT_FALSE((MuPair{Rational(1, 2), 0}).is_arrow_data());
  EXPECT_FALSE((MuPair{-1, 0}).is_arrow_data());
  EXPECT_TRUE((MuPair{0, 3}).is_arrow_data());
}

TEST(Hull, MutateMuMatchesRecomputation) {
  auto ps = fixture("gc3").pullback();
  auto next = mutate_pullback(ps, 1);
  const auto& q = ps.base_quiver();
  NeighborArrows link{q.arrows(0, 1), q.arrows(1, 0)};
  EXPECT_EQ(mutate_mu(compute_profile(ps, 0, 0), ps.arrow_pair(0, 0), link, ps.arrow_pair(0, 1)), next.arrow_pair(0, 0));
}

}  // namespace
