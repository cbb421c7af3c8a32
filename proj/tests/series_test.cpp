#include <gtest/gtest.h>

#include <random>

#include "cubicpm/series.hpp"

namespace cubicpm {
namespace {

Series random_series(std::mt19937& rng, std::size_t order) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 6);
  Series s(order);
  for (std::size_t i = 0; i <= order; ++i) {
    s[i] = Rational(num(rng), den(rng));
    s[i].canonicalize();
  }
  return s;
}

TEST(Combine, DifferenceOfSquares) {
  const Series a = Series::from_integers(2, {1, 1});
  const Series b = Series::from_integers(2, {1, -1});
  EXPECT_EQ(a * b, Series::from_integers(2, {1, 0, -1}));
}

TEST(Combine, AddZeroIsIdentity) {
  const Series a = Series::from_integers(4, {3, -1, 7, 0, 2});
  EXPECT_EQ(a + Series(4), a);
}

TEST(Combine, HandExpansion) {
  const Series a = Series::from_integers(4, {0, 1, 3});
  EXPECT_EQ(a * a, Series::from_integers(4, {0, 0, 1, 6, 9}));
}

TEST(Combine, OrderMismatchIsUsageError) {
  EXPECT_THROW(Series(3) + Series(4), UsageError);
  EXPECT_THROW(combine(Series(3), Series(2), SeriesOp::Mul), UsageError);
}

TEST(Combine, RingLawsOnRandomSeries) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const Series a = random_series(rng, n), b = random_series(rng, n), c = random_series(rng, n);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a - b) + b, a);
  }
}

TEST(Compose, Basic) {
  const Series f = Series::from_integers(3, {0, 0, 1});
  const Series g = Series::from_integers(3, {0, 2});
  EXPECT_EQ(compose(f, g), Series::from_integers(3, {0, 0, 4}));
}

TEST(Compose, IdentitySubstitutionRoundTrips) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Series f = random_series(rng, n);
    EXPECT_EQ(compose(f, Series::monomial(n, 1)), f);
  }
}

TEST(Compose, RejectsNonzeroConstant) {
  EXPECT_THROW(compose(Series::from_integers(2, {1, 1}), Series::from_integers(2, {1, 1})), DomainError);
}

TEST(Compose, MatchesRepeatedMultiplication) {
  // (1 + g)^3 via compose against the direct product.
  const Series f = Series::from_integers(6, {1, 3, 3, 1});
  const Series g = Series::from_integers(6, {0, 2, -1, 5});
  const Series one_g = one_plus(g);
  EXPECT_EQ(compose(f, g), one_g * one_g * one_g);
}

TEST(Divide, ExactShift) {
  const Series a = Series::from_integers(3, {0, 0, 1, 1});
  const Series z = Series::monomial(3, 1);
  const Series q = divide(a, z);
  EXPECT_EQ(q.order(), 2u);
  EXPECT_EQ(q, Series::from_integers(2, {0, 1, 1}));
}

TEST(Divide, GeometricSeries) {
  const Series one = Series::constant(3, 1);
  EXPECT_EQ(divide(one, Series::from_integers(3, {1, -1})), Series::from_integers(3, {1, 1, 1, 1}));
}

TEST(Divide, InexactShiftIsDomainError) {
  EXPECT_THROW(divide(Series::from_integers(3, {1, 1}), Series::monomial(3, 1)), DomainError);
}

TEST(Divide, InvertsMultiplication) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 7;
    Series b = random_series(rng, n);
    if (sgn(b[0]) == 0) b[0] = 1;
    const Series a = random_series(rng, n);
    EXPECT_EQ(divide(a * b, b), a);
  }
}

TEST(ExpSeries, Basics) {
  EXPECT_EQ(exp_series(Series(3)), Series::constant(3, 1));
  const Series e = exp_series(Series::monomial(3, 1));
  EXPECT_EQ(e, Series(3, {Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)}));
  EXPECT_THROW(exp_series(Series::constant(3, 1)), DomainError);
}

TEST(ExpSeries, ExponentOfSumIsProduct) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Series a = random_series(rng, 6), b = random_series(rng, 6);
    a[0] = 0;
    b[0] = 0;
    EXPECT_EQ(exp_series(a + b), exp_series(a) * exp_series(b));
  }
}

TEST(IntegratePointed, Basics) {
  EXPECT_EQ(integrate_pointed(Series::monomial(3, 2)), Series::monomial(3, 2, Rational(1, 2)));
  EXPECT_EQ(integrate_pointed(Series(3)), Series(3));
  const Series f = Series::from_integers(5, {0, 4, -2, 9});
  EXPECT_EQ(integrate_pointed(pointed(f)), f);
}

TEST(FixedPoint, Catalan) {
  const Series z = Series::monomial(4, 1);
  const auto y = solve_fixed_point(
      [&](std::span<const Series> v) { return std::vector<Series>{z + v[0] * v[0]}; }, 1, 4);
  EXPECT_EQ(y[0], Series::from_integers(4, {0, 1, 1, 2, 5}));
}

TEST(FixedPoint, OutputIsAFixedPoint) {
  const std::size_t n = 12;
  const Series z = Series::monomial(n, 1);
  const SeriesSystem sys = [&](std::span<const Series> v) {
    return std::vector<Series>{z * one_plus(v[1]), z * one_plus(v[0]) * one_plus(v[0])};
  };
  const auto y = solve_fixed_point(sys, 2, n);
  EXPECT_EQ(sys(y), y);
  EXPECT_TRUE(y[0].is_nonnegative());
  EXPECT_TRUE(y[1].is_nonnegative());
}

TEST(FixedPoint, NonContractingSystemDiverges) {
  // y = 1 + y never stabilizes.
  const std::size_t n = 3;
  const SeriesSystem sys = [&](std::span<const Series> v) { return std::vector<Series>{one_plus(v[0])}; };
  EXPECT_THROW(solve_fixed_point(sys, 1, n), DivergenceError);
}

TEST(FixedPoint, NegativeFixedPointIsFlagged) {
  const Series z = Series::monomial(3, 1);
  const SeriesSystem sys = [&](std::span<const Series>) { return std::vector<Series>{-z}; };
  EXPECT_THROW(solve_fixed_point(sys, 1, 3), NegativeCoefficientError);
}

TEST(Algebraic, CatalanBranch) {
  const BivariatePoly p{{2, 0, 1}, {1, 0, -1}, {0, 1, 1}};  // y^2 - y + z
  const std::vector<Rational> seed{0};
  const Series y = solve_algebraic(p, seed, 6);
  EXPECT_EQ(y, Series::from_integers(6, {0, 1, 1, 2, 5, 14, 42}));
  EXPECT_FALSE(residual_valuation(y, p).has_value());
}

TEST(Algebraic, InconsistentSeedIsBranchError) {
  const BivariatePoly p{{2, 0, 1}, {1, 0, -1}, {0, 1, 1}};
  const std::vector<Rational> seed{0, 2};
  EXPECT_THROW(solve_algebraic(p, seed, 6), BranchError);
}

TEST(Algebraic, DegenerateDerivativeNeedsLongerSeed) {
  // (y - z)^2 - z^4: dp/dy = 2(y - z) has valuation >= 2 along the branch.
  const BivariatePoly p{{2, 0, 1}, {1, 1, -2}, {0, 2, 1}, {0, 4, -1}};
  const std::vector<Rational> seed{0, 1};
  EXPECT_THROW(solve_algebraic(p, seed, 8), NeedsLongerSeedError);
}

TEST(Algebraic, LinearFallbackWhenDerivativeHasPositiveValuation) {
  // (y - z)^2 - z^4 with seed 0, 1, 1 selects y = z + z^2.
  const BivariatePoly p{{2, 0, 1}, {1, 1, -2}, {0, 2, 1}, {0, 4, -1}};
  const std::vector<Rational> seed{0, 1, 1};
  const Series y = solve_algebraic(p, seed, 8);
  EXPECT_EQ(y, Series::from_integers(8, {0, 1, 1}));
}

TEST(Algebraic, NewtonMatchesLinearSolver) {
  // q = z^2 p has dq/dy of valuation 2, so q goes through the linear path.
  const BivariatePoly p{{2, 0, -1}, {1, 0, 1}, {0, 1, -1}};
  const BivariatePoly q{{2, 2, -1}, {1, 2, 1}, {0, 3, -1}};
  const std::vector<Rational> seed{0, 1, 1};
  EXPECT_EQ(solve_algebraic(p, seed, 12), solve_algebraic(q, seed, 12));
}

TEST(Json, RoundTripPreservesExactValues) {
  Series s(3, {Rational(1, 3), Rational(-7), Rational(0), Rational(Integer("123456789012345678901234567890"), 7)});
  s[3].canonicalize();
  const auto j = to_json(s);
  EXPECT_EQ(j.at("order"), 3);
  EXPECT_EQ(j.at("coeffs").at(0).at(1), "3");
  EXPECT_EQ(series_from_json(j), s);
}

}  // namespace
}  // namespace cubicpm
