#include <gtest/gtest.h>

#include "gcluster/errors.hpp"
#include "gcluster/polyring.hpp"
#include "gcluster/split.hpp"

using namespace gcluster;

namespace {

VarTablePtr xyz() { return make_var_table({"x", "y", "z"}); }

TEST(Polyring, ParsePrintsCanonicalGrlex) {
  auto t = xyz();
  EXPECT_EQ(parse_poly("y + x^2 - 3/6*z*x + 1", t).to_string(), "x^2 - 1/2*x*z + y + 1");
  EXPECT_EQ(parse_poly("(x + y)^2", t).to_string(), "x^2 + 2*x*y + y^2");
  EXPECT_EQ(parse_poly("0", t).to_string(), "0");
  EXPECT_EQ(parse_poly("-x", t).to_string(), "-x");
}

TEST(Polyring, ParseRejectsUnknownNamesAndSyntax) {
  auto t = xyz();
  EXPECT_THROW(parse_poly("w + 1", t), ParseError);
  EXPECT_THROW(parse_poly("x +", t), ParseError);
  EXPECT_THROW(parse_poly("x^-1", t), ParseError);
}

TEST(Polyring, ArithmeticMatchesExpansion) {
  auto t = xyz();
  Poly a = parse_poly("x + y", t), b = parse_poly("x - y", t);
  EXPECT_EQ(a * b, parse_poly("x^2 - y^2", t));
  EXPECT_EQ(a + b, parse_poly("2*x", t));
  EXPECT_EQ(a - a, Poly::constant(t, 0));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.pow(3), a * a * a);
  EXPECT_EQ(a.leading_term().mono, Monomial({1, 0, 0}));
}

TEST(Polyring, MixedTablesAreRejected) {
  auto a = parse_poly("x", xyz());
  auto b = parse_poly("x", make_var_table({"x", "w"}));
  EXPECT_THROW((void)(a + b), StructuralError);
}

TEST(Polyring, ExactDivision) {
  auto t = xyz();
  Poly q = parse_poly("x*y - z^2 + 3", t), c = parse_poly("2*x^3 - y + z", t);
  auto got = try_div_exact(q * c, q);
  ASSERT_TRUE(got);
  EXPECT_EQ(*got, c);
  EXPECT_FALSE(try_div_exact(q * c + Poly::constant(t, 1), q));
  EXPECT_THROW(try_div_exact(q, Poly::constant(t, 0)), DivisionByZero);
  EXPECT_EQ(*try_div_exact(parse_poly("4*x", t), Poly::constant(t, 2)), parse_poly("2*x", t));
}

TEST(Polyring, ValuationCountsRepeatedFactors) {
  auto t = xyz();
  Poly q = parse_poly("x + z", t);
  auto v = valuation(q.pow(3) * parse_poly("y", t), q);
  EXPECT_EQ(v.k, 3u);
  EXPECT_EQ(v.cofactor, parse_poly("y", t));
  EXPECT_THROW(valuation(Poly::constant(t, 0), q), DomainError);
}

TEST(Polyring, DerivativeAndEvaluation) {
  auto t = xyz();
  Poly p = parse_poly("x^3*y + 2*z - 1/3", t);
  EXPECT_EQ(partial_derivative(p, 0), parse_poly("3*x^2*y", t));
  std::vector<Rational> pt = {Rational(2), Rational(1, 2), Rational(-1)};
  EXPECT_EQ(evaluate(p, pt), Rational(4) - 2 - Rational(1, 3));
}

TEST(Split, NormalizeExtractsDistinguishedFactors) {
  auto t = xyz();
  auto dist = make_dist_set(t, {{"q", DistKind::G, parse_poly("x + y", t)}});
  auto s = RationalSplit::normalize(dist, parse_poly("(x + y)^2*z", t), {3});
  EXPECT_EQ(s.numerator(), parse_poly("z", t));
  EXPECT_EQ(s.lambda(0), 1);
  EXPECT_EQ(s * RationalSplit::q_power(dist, 0, 1), RationalSplit::normalize(dist, parse_poly("z", t), {0}));
}

TEST(Split, SumsShareTheCommonDenominator) {
  auto t = xyz();
  auto dist = make_dist_set(t, {{"q", DistKind::G, parse_poly("x", t)}});
  auto a = RationalSplit::normalize(dist, parse_poly("y", t), {1});
  auto b = RationalSplit::normalize(dist, parse_poly("z", t), {2});
  auto s = a + b;
  EXPECT_EQ(s.lambda(0), 2);
  EXPECT_EQ(s.numerator(), parse_poly("x*y + z", t));
  EXPECT_EQ((a - a), RationalSplit::zero(dist));
}

}  // namespace
