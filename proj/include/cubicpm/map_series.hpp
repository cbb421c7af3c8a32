#pragma once

// Counting series for rooted cubic planar maps with a distinguished perfect
// matching: closed formulas, algebraic branches, and the two decomposition
// systems (all maps, bridgeless maps) driven by the 3-connected series.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "cubicpm/errors.hpp"
#include "cubicpm/polynomials.hpp"
#include "cubicpm/series.hpp"

namespace cubicpm {

enum class CountKind {
  MatchedCubic,
  Cubic,
  MatchedBridgeless,
  Bridgeless,
  RootedPlanar,  // R_n: rooted planar maps with n edges (= rooted 4-regular maps, n vertices)
  Loopless,      // L_n: rooted loopless (equivalently bridgeless) maps with n edges
};

inline constexpr std::array<CountKind, 6> kAllCountKinds{
    CountKind::MatchedCubic, CountKind::Cubic,        CountKind::MatchedBridgeless,
    CountKind::Bridgeless,   CountKind::RootedPlanar, CountKind::Loopless};

inline std::string_view to_string(CountKind k) {
  switch (k) {
    case CountKind::MatchedCubic: return "matched_cubic";
    case CountKind::Cubic: return "cubic";
    case CountKind::MatchedBridgeless: return "matched_bridgeless";
    case CountKind::Bridgeless: return "bridgeless";
    case CountKind::RootedPlanar: return "rooted_planar_R";
    case CountKind::Loopless: return "loopless_L";
  }
  return "?";
}

inline CountKind count_kind_from_string(std::string_view s) {
  for (CountKind k : kAllCountKinds) {
    if (to_string(k) == s) return k;
  }
  throw UsageError("unknown count kind: " + std::string(s));
}

namespace detail {

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// n!! = n (n-2) (n-4) ... down to 1 or 2.
inline Integer double_factorial(unsigned long n) {
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer pow_ui(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

inline Integer exact_quotient(const Integer& num, const Integer& den, CountKind kind, unsigned long n) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw InternalError("closed_form_count(" + std::string(to_string(kind)) + ", " +
                        std::to_string(n) + "): non-integral quotient");
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace detail

/// Exact closed-form value for the given family at size n >= 1.
inline Integer closed_form_count(CountKind kind, unsigned long n) {
  using namespace detail;
  if (n < 1) throw UsageError("closed_form_count: n must be >= 1");
  switch (kind) {
    case CountKind::MatchedCubic:
      return exact_quotient(3 * pow_ui(6, n) * binomial(2 * n, n), Integer((n + 2) * (n + 1)), kind, n);
    case CountKind::Cubic:
      return exact_quotient(pow_ui(2, 2 * n + 1) * double_factorial(3 * n),
                            factorial(n + 2) * double_factorial(n), kind, n);
    case CountKind::MatchedBridgeless:
      return exact_quotient(3 * pow_ui(2, n - 1) * binomial(4 * n + 2, n),
                            Integer((2 * n + 1) * (n + 1)), kind, n);
    case CountKind::Bridgeless:
      return exact_quotient(pow_ui(2, n + 1) * binomial(3 * n, n), Integer((2 * n + 2) * (2 * n + 1)),
                            kind, n);
    case CountKind::RootedPlanar:
      return exact_quotient(2 * pow_ui(3, n) * binomial(2 * n, n), Integer((n + 2) * (n + 1)), kind, n);
    case CountKind::Loopless:
      return exact_quotient(binomial(4 * n + 2, n), Integer((2 * n + 1) * (n + 1)), kind, n);
  }
  throw UsageError("closed_form_count: unknown kind");
}

/// M(z): matched cubic maps by size, from the quadratic branch through 0.
inline Series matched_map_series(std::size_t order) {
  return solve_algebraic(polynomials::matched_maps(), polynomials::matched_maps_seed(), order);
}

struct Matched3ConnectedSeries {
  Series T0;  // root edge outside the matching
  Series T1;  // root edge in the matching
  Series total() const { return T0 + T1; }
};

/// T1 from its minimal polynomial; T0 = 2 T1 because the class is closed
/// under rerooting and two thirds of the edges avoid any perfect matching.
inline Matched3ConnectedSeries matched_3connected_series(std::size_t order) {
  if (order < 2) throw UsageError("matched_3connected_series: order must be >= 2");
  Series t1 = solve_algebraic(polynomials::matched_3connected_root_in_matching(),
                              polynomials::matched_3connected_seed(), order);
  Series t0 = Rational(2) * t1;
  return {std::move(t0), std::move(t1)};
}

struct MatchedMapSystem {
  Series M0, M1, D0, D1, I, L, S0, S1, P0, P1, H0, H1;
};

/// Solves the decomposition system for rooted matched cubic maps (loop,
/// isthmus, series, parallel, polyhedral root classes) given T0, T1.
/// Solved internally one order higher because I = L^2 / (4z) loses one.
inline MatchedMapSystem solve_matched_map_system(const Series& T0, const Series& T1, std::size_t order) {
  if (T0.order() < order || T1.order() < order) {
    throw UsageError("solve_matched_map_system: T0/T1 order below requested order");
  }
  const std::size_t w = order + 1;
  const Series t0 = T0.truncated(w);
  const Series t1 = T1.truncated(w);
  const Series z = Series::monomial(w, 1);

  enum { D0, D1, L, S0, S1, P0, P1, H0, H1, kUnknowns };
  const SeriesSystem system = [&](std::span<const Series> y) {
    const Series a0 = one_plus(y[D0]);
    const Series a1 = one_plus(y[D1]);
    const Series arg = z * a1 * a0 * a0;
    std::vector<Series> next(kUnknowns);
    next[D0] = y[L] + y[S0] + y[P0] + y[H0];
    next[D1] = y[S1] + y[P1] + y[H1];
    next[L] = Rational(2) * z * a0;
    // D0 - S0 and D1 - S1 rewritten with nonnegative terms.
    next[S0] = y[D0] * (y[L] + y[P0] + y[H0]);
    next[S1] = y[D1] * (y[P1] + y[H1]);
    next[P0] = Rational(2) * z * a0 * a1;
    next[P1] = z * a0 * a0;
    next[H0] = divide(compose(t0, arg), a0);
    next[H1] = divide(compose(t1, arg), a1);
    return next;
  };
  std::vector<Series> y = solve_fixed_point(system, kUnknowns, w);

  const Series I = divide(y[L] * y[L], Rational(4) * z);  // order w - 1 = order
  MatchedMapSystem out;
  out.D0 = y[D0].truncated(order);
  out.D1 = y[D1].truncated(order);
  out.L = y[L].truncated(order);
  out.S0 = y[S0].truncated(order);
  out.S1 = y[S1].truncated(order);
  out.P0 = y[P0].truncated(order);
  out.P1 = y[P1].truncated(order);
  out.H0 = y[H0].truncated(order);
  out.H1 = y[H1].truncated(order);
  out.I = I;
  out.M0 = out.D0;
  out.M1 = out.D1 + out.I;
  return out;
}

struct MatchedBridgelessSystem {
  Series B, D0, D1, S0, S1, P0, P1, H0, H1;
};

/// The same system with loop and isthmus maps removed; B = D0 + D1.
inline MatchedBridgelessSystem solve_matched_bridgeless_system(const Series& T0, const Series& T1,
                                                               std::size_t order) {
  if (T0.order() < order || T1.order() < order) {
    throw UsageError("solve_matched_bridgeless_system: T0/T1 order below requested order");
  }
  const Series t0 = T0.truncated(order);
  const Series t1 = T1.truncated(order);
  const Series z = Series::monomial(order, 1);

  enum { D0, D1, S0, S1, P0, P1, H0, H1, kUnknowns };
  const SeriesSystem system = [&](std::span<const Series> y) {
    const Series a0 = one_plus(y[D0]);
    const Series a1 = one_plus(y[D1]);
    const Series arg = z * a1 * a0 * a0;
    std::vector<Series> next(kUnknowns);
    next[D0] = y[S0] + y[P0] + y[H0];
    next[D1] = y[S1] + y[P1] + y[H1];
    next[S0] = y[D0] * (y[P0] + y[H0]);
    next[S1] = y[D1] * (y[P1] + y[H1]);
    next[P0] = Rational(2) * z * a0 * a1;
    next[P1] = z * a0 * a0;
    next[H0] = divide(compose(t0, arg), a0);
    next[H1] = divide(compose(t1, arg), a1);
    return next;
  };
  std::vector<Series> y = solve_fixed_point(system, kUnknowns, order);
  MatchedBridgelessSystem out;
  out.D0 = y[D0];
  out.D1 = y[D1];
  out.S0 = y[S0];
  out.S1 = y[S1];
  out.P0 = y[P0];
  out.P1 = y[P1];
  out.H0 = y[H0];
  out.H1 = y[H1];
  out.B = out.D0 + out.D1;
  return out;
}

struct TriangulationSeries {
  Series U;      // z = U (1 - U)^3
  Series Theta;  // simple triangulations, z marks vertices minus two
  Series M3;     // 3-connected cubic maps, z marks faces minus two
};

/// Tutte's simple-triangulation series via the fixed point U = z + 3U^2 - 3U^3 + U^4.
inline TriangulationSeries tutte_triangulation_series(std::size_t order) {
  if (order < 1) throw UsageError("tutte_triangulation_series: order must be >= 1");
  const Series z = Series::monomial(order, 1);
  const SeriesSystem system = [&](std::span<const Series> y) {
    const Series u2 = y[0] * y[0];
    const Series u3 = u2 * y[0];
    return std::vector<Series>{z + Rational(3) * u2 - Rational(3) * u3 + u2 * u2};
  };
  TriangulationSeries out;
  out.U = solve_fixed_point(system, 1, order).front();
  out.Theta = out.U * (Series::constant(order, 1) - Rational(2) * out.U);
  out.M3 = out.Theta - z;
  return out;
}

/// [z^n] Theta straight from the parametrization by Lagrange inversion:
/// [z^n] U = C(4n-2, n-1) / n and [z^n] U^2 = 2 C(4n-3, n-2) / n.
inline Rational triangulation_coefficient_by_lagrange(unsigned long n) {
  if (n < 1) throw UsageError("triangulation_coefficient_by_lagrange: n must be >= 1");
  Rational u(detail::binomial(4 * n - 2, n - 1), Integer(n));
  Rational u2 = n >= 2 ? Rational(2 * detail::binomial(4 * n - 3, n - 2), Integer(n)) : Rational(0);
  u.canonicalize();
  u2.canonicalize();
  return u - 2 * u2;
}

/// nullopt when p(y, z) vanishes through z^order; otherwise the first index
/// with a nonzero residual coefficient.
inline std::optional<std::size_t> verify_minimal_polynomial(const Series& y, const BivariatePoly& p) {
  return residual_valuation(y, p);
}

}  // namespace cubicpm
