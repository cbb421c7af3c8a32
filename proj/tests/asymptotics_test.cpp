#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cubicpm/asymptotics.hpp"

namespace cubicpm {
namespace {

TEST(Sturm, SqrtTwo) {
  const RealBall r = smallest_positive_root(std::vector<long>{-2, 0, 1}, Rational(1, 1000000));
  EXPECT_TRUE(r.within(1.41421, 1e-5));
  EXPECT_LE(r.rad, Rational(1, 1000000));
  EXPECT_LE(r.lo() * r.lo(), 2);
  EXPECT_GE(r.hi() * r.hi(), 2);
}

TEST(Sturm, PicksTheLeastPositiveRoot) {
  // (2x - 1)(x - 3)(x + 1)
  const RealBall r = smallest_positive_root(std::vector<long>{3, -4, -5, 2});
  EXPECT_LE(r.lo(), Rational(1, 2));
  EXPECT_GE(r.hi(), Rational(1, 2));
}

TEST(Sturm, CountsDistinctRoots) {
  // (x-1)^2 (x-2): two distinct roots in (0, 3].
  const QPoly p = poly::from_ints({-2, 5, -4, 1});
  EXPECT_EQ(poly::count_roots(poly::sturm_sequence(p), Rational(0), Rational(3)), 2);
  const RealBall r = smallest_positive_root(p, Rational(1, 1000));
  EXPECT_FALSE(root_is_simple(p, r));
}

TEST(Sturm, NoPositiveRootIsADomainError) {
  EXPECT_THROW(smallest_positive_root(std::vector<long>{1, 0, 1}), DomainError);
  EXPECT_THROW(smallest_positive_root(std::vector<long>{1, 1}), DomainError);
  EXPECT_THROW(smallest_positive_root(std::vector<long>{5}), DomainError);
}

TEST(Sturm, QuotedPolynomialsHaveSimpleBracketedRoots) {
  for (const auto& p : {polynomials::sigma_factor(), polynomials::rho_factor(), polynomials::sigma_bridgeless_factor(),
                        polynomials::rho_bridgeless_factor(), polynomials::alpha_bridgeless_poly()}) {
    const QPoly q = poly::from_ints(p);
    const RealBall r = smallest_positive_root(q);
    EXPECT_TRUE(root_is_simple(q, r));
    EXPECT_TRUE(brackets_sign_change(q, r));
    EXPECT_LE(r.rad, default_radius());
  }
}

TEST(Sturm, SingularitiesOfTheFourGraphClasses) {
  EXPECT_TRUE(smallest_positive_root(polynomials::sigma_factor()).within(0.27964, 1e-5));
  EXPECT_TRUE(smallest_positive_root(polynomials::sigma_bridgeless_factor()).within(0.27980, 1e-5));
  EXPECT_TRUE(smallest_positive_root(polynomials::rho_factor()).within(0.31923, 1e-5));
  EXPECT_TRUE(smallest_positive_root(polynomials::rho_bridgeless_factor()).within(0.319523, 1e-6));
}

TEST(Constants, QuotedDecimalsLieInsideTheBalls) {
  const auto all = constants_report();
  // Within one unit of the last printed digit.
  const std::pair<const char*, double> printed[] = {{"sigma", 1e-5}, {"rho", 1e-5},   {"sigma_b", 1e-5},
                                                    {"rho_b", 1e-6}, {"delta", 1e-5}, {"gamma", 1e-5},
                                                    {"alpha_b", 1e-5}};
  for (const auto& [name, unit] : printed) {
    const NamedConstant& c = find_constant(all, name);
    EXPECT_TRUE(c.ball.within(c.paper_value, unit)) << name << " " << c.ball.value();
  }
}

TEST(Constants, RhoIsQuotedRoundedUp) {
  // rho = 0.3192246..., so 0.31923 is half a unit plus 4e-7 away; every other
  // quoted decimal is correctly rounded.
  const auto all = constants_report();
  const RealBall rho = find_constant(all, "rho").ball;
  EXPECT_TRUE(rho.within(0.3192246, 1e-7));
  EXPECT_FALSE(rho.within(0.31923, 0.5e-5));
  for (const char* name : {"sigma", "sigma_b", "delta", "gamma", "alpha_b"}) {
    const NamedConstant& c = find_constant(all, name);
    EXPECT_TRUE(c.ball.within(c.paper_value, 0.5e-5)) << name;
  }
}

TEST(Constants, GrowthRatios) {
  const auto all = constants_report();
  EXPECT_TRUE(find_constant(all, "gamma").ball.within(1.14196, 1e-5));
  EXPECT_TRUE(find_constant(all, "delta").ball.within(1.14157, 1e-5));
  EXPECT_GE(find_constant(all, "alpha_b_over_sigma_b").ball.lo(), Rational(1119, 1000));
  EXPECT_GE(find_constant(all, "alpha_over_sigma").ball.lo(), Rational(1109, 1000));
}

TEST(Constants, AlphaBridgelessClosedForm) {
  const auto all = constants_report();
  const auto& c = find_constant(all, "alpha_b");
  EXPECT_NEAR(c.ball.value(), std::sqrt((3 * std::sqrt(3.0) - 5) / 2), 1e-15);
}

TEST(Constants, JsonShape) {
  const auto j = to_json(constants_report(Rational(1, 1 << 30)));
  ASSERT_TRUE(j.contains("gamma"));
  EXPECT_TRUE(j["gamma"].contains("mid"));
  EXPECT_TRUE(j["gamma"].contains("rad"));
  EXPECT_DOUBLE_EQ(j["gamma"]["paper_value"].get<double>(), 1.14196);
  EXPECT_THROW(find_constant(constants_report(Rational(1, 1000)), "phi"), UsageError);
}

TEST(Balls, DivisionNeedsPositiveBalls) {
  const RealBall one{Rational(1), Rational(0)};
  const RealBall around_zero{Rational(0), Rational(1, 10)};
  EXPECT_THROW(divide(one, around_zero), DomainError);
  const RealBall q = divide(RealBall{Rational(3), Rational(0)}, RealBall{Rational(2), Rational(0)});
  EXPECT_EQ(q.mid, Rational(3, 2));
  EXPECT_EQ(q.rad, 0);
}

TEST(Balls, ParseDecimal) {
  EXPECT_EQ(parse_decimal("1.119"), Rational(1119, 1000));
  EXPECT_EQ(parse_decimal("0.319523"), Rational(319523, 1000000));
  EXPECT_EQ(parse_decimal("12"), 12);
  EXPECT_EQ(parse_decimal("0.0890"), Rational(89, 1000));  // leading zeros are not octal
}

TEST(Transfer, AtOneIsTheConstantOverRho) {
  const long double a3 = 2, rho = 1.0L / 24;
  EXPECT_NEAR(static_cast<double>(transfer_estimate(a3, rho, 1)),
              static_cast<double>(3 * a3 / (2 * std::sqrt(std::numbers::pi_v<long double>)) / rho), 1e-9);
  EXPECT_THROW(transfer_estimate(0, rho, 1), UsageError);
}

double ratio_to_exact(long double log_estimate, const Integer& exact) {
  return std::exp(static_cast<double>(log_estimate) - log_of(Rational(exact)));
}

TEST(Transfer, MatchedMapsAtFiveHundred) {
  const long double est = log_transfer_estimate(2, 1.0L / 24, 500);
  EXPECT_NEAR(ratio_to_exact(est, closed_form_count(CountKind::MatchedCubic, 500)), 1.0, 0.01);
}

TEST(Transfer, MatchedBridgelessAtFiveHundred) {
  const long double a3 = 8 * std::sqrt(6.0L) / 27;
  const long double est = log_transfer_estimate(a3, 27.0L / 512, 500);
  EXPECT_NEAR(ratio_to_exact(est, closed_form_count(CountKind::MatchedBridgeless, 500)), 1.0, 0.01);
}

TEST(GrowthFit, MatchedMaps) {
  const GrowthFit f = growth_fit(closed_form_sequence(CountKind::MatchedCubic, 500));
  EXPECT_NEAR(f.growth, 24, 0.24);
  EXPECT_NEAR(f.polyexp, -2.5, 0.05);
}

TEST(GrowthFit, MatchedBridgeless) {
  const GrowthFit f = growth_fit(closed_form_sequence(CountKind::MatchedBridgeless, 500));
  EXPECT_NEAR(f.growth, 512.0 / 27, 0.01 * 512.0 / 27);
  EXPECT_NEAR(f.polyexp, -2.5, 0.05);
}

TEST(GrowthFit, ExpectedMatchingRatios) {
  const auto m = closed_form_sequence(CountKind::MatchedCubic, 500);
  const auto c = closed_form_sequence(CountKind::Cubic, 500);
  const auto b = closed_form_sequence(CountKind::MatchedBridgeless, 500);
  const auto bc = closed_form_sequence(CountKind::Bridgeless, 500);
  const double two_root3_over3 = 2 * std::sqrt(3.0) / 3;
  EXPECT_NEAR(growth_fit(ratio_sequence(m, c)).growth, two_root3_over3, 0.01 * two_root3_over3);
  EXPECT_NEAR(growth_fit(ratio_sequence(b, bc)).growth, 1024.0 / 729, 0.01 * 1024.0 / 729);
}

TEST(GrowthFit, PureExponentialIsExact) {
  std::vector<Rational> s;
  for (long n = 1; n <= 80; ++n) {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), 7, static_cast<unsigned long>(n));
    s.emplace_back(v * n * n);
  }
  const GrowthFit f = growth_fit(s);
  EXPECT_NEAR(f.growth, 7, 1e-6);
  EXPECT_NEAR(f.polyexp, 2, 1e-6);
}

TEST(GrowthFit, Preconditions) {
  EXPECT_THROW(growth_fit(std::vector<Rational>(10, Rational(1))), UsageError);
  std::vector<Rational> s(60, Rational(1));
  s[55] = 0;
  EXPECT_THROW(growth_fit(s), DomainError);
}

}  // namespace
}  // namespace cubicpm
