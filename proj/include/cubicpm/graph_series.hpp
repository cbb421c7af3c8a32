#pragma once

// Labeled cubic planar graphs with a distinguished perfect matching, through
// the network decomposition. All series are exponential in x, even, and
// solved at order N + 2 because I = L^2 / x^2 loses two orders.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubicpm/errors.hpp"
#include "cubicpm/map_series.hpp"
#include "cubicpm/series.hpp"

namespace cubicpm {

enum class NetworkVariant { General, Bridgeless };

/// Reading of the substitution argument x^2 (1 + D1) * (...) in H0, H1.
enum class HSubstitution {
  SquareOfSum,  // (1 + D0)^2, the reading that matches the map system
  SumOfSquare,  // (1 + D0^2)
};

struct NetworkSystemResult {
  NetworkVariant variant = NetworkVariant::General;
  Series D0, D1, L, I, S0, S1, P0, P1, H0, H1;
  Series pointed;  // C^bullet (general) or A^bullet (bridgeless): graphs rooted at a vertex
  Series graphs;   // C or A, by integrating `pointed`
};

inline NetworkSystemResult solve_network_system(const Series& T0, const Series& T1, std::size_t order,
                                                NetworkVariant variant,
                                                HSubstitution h = HSubstitution::SquareOfSum) {
  if (order % 2 != 0) throw UsageError("solve_network_system: order must be even");
  if (T0.order() < order / 2 + 1 || T1.order() < order / 2 + 1) {
    throw UsageError("solve_network_system: T0/T1 order too small");
  }
  const std::size_t w = order + 2;
  const Series t0 = T0.truncated(w);
  const Series t1 = T1.truncated(w);
  const Series x2 = Series::monomial(w, 2);
  const Rational half(1, 2);
  const bool general = variant == NetworkVariant::General;

  enum { D0, D1, L, S0, S1, P0, P1, H0, H1, kUnknowns };
  const SeriesSystem system = [&](std::span<const Series> y) {
    const Series a0 = one_plus(y[D0]);
    const Series a1 = one_plus(y[D1]);
    const Series arg = h == HSubstitution::SquareOfSum ? x2 * a1 * a0 * a0
                                                       : x2 * a1 * one_plus(y[D0] * y[D0]);
    std::vector<Series> next(kUnknowns, Series(w));
    next[D0] = y[L] + y[S0] + y[P0] + y[H0];
    next[D1] = y[S1] + y[P1] + y[H1];
    if (general) next[L] = half * x2 * (y[S0] + y[P0] + y[H0]);  // x^2/2 (D0 - L)
    next[S0] = y[D0] * (y[L] + y[P0] + y[H0]);                     // D0 (D0 - S0)
    next[S1] = y[D1] * (y[P1] + y[H1]);                            // D1 (D1 - S1)
    next[P0] = x2 * (y[D0] + y[D1]) + x2 * y[D0] * y[D1];
    next[P1] = x2 * y[D0] + half * x2 * y[D0] * y[D0];
    next[H0] = divide(compose(t0, arg), Rational(2) * a0);
    next[H1] = divide(compose(t1, arg), Rational(2) * a1);
    return next;
  };
  const std::vector<Series> y = solve_fixed_point(system, kUnknowns, w);

  NetworkSystemResult out;
  out.variant = variant;
  const Series x2n = Series::monomial(order, 2);
  out.D0 = y[D0].truncated(order);
  out.D1 = y[D1].truncated(order);
  out.L = y[L].truncated(order);
  out.S0 = y[S0].truncated(order);
  out.S1 = y[S1].truncated(order);
  out.P0 = y[P0].truncated(order);
  out.P1 = y[P1].truncated(order);
  out.H0 = y[H0].truncated(order);
  out.H1 = y[H1].truncated(order);
  out.I = divide(y[L] * y[L], x2);  // order w - 2 = order
  Series three_pointed = out.D0 + out.D1 - Rational(2) * x2n * out.D0 - x2n * out.D1;
  if (general) three_pointed = three_pointed + out.I - out.L - out.L * out.L;
  out.pointed = Rational(1, 3) * three_pointed;
  out.graphs = integrate_pointed(out.pointed);

  for (const Series* s : {&out.D0, &out.D1, &out.L, &out.I, &out.S0, &out.S1, &out.P0, &out.P1,
                          &out.H0, &out.H1, &out.pointed}) {
    if (!s->is_nonnegative()) throw NegativeCoefficientError("solve_network_system: negative coefficient");
    for (std::size_t i = 1; i <= s->order(); i += 2) {
      if (sgn((*s)[i]) != 0) throw InternalError("solve_network_system: odd coefficient in an even series");
    }
  }
  return out;
}

/// G = exp(C): every cubic planar graph is a set of connected ones.
inline Series all_graphs_series(const Series& connected) { return exp_series(connected); }

/// n! [x^n] f.
inline Integer labeled_count(const Series& egf, std::size_t n) {
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  const Rational v = egf[n] * Rational(fact);
  if (v.get_den() != 1) throw InternalError("labeled_count: non-integral labeled count");
  return v.get_num();
}

struct LabeledCountsRow {
  std::size_t n;
  Integer all;          // G_n
  Integer connected;    // C_n
  Integer bridgeless;   // A_n
};

struct GraphSeriesBundle {
  NetworkSystemResult general;
  NetworkSystemResult bridgeless;
  Series all;  // G
};

inline GraphSeriesBundle solve_graph_series(std::size_t order, HSubstitution h = HSubstitution::SquareOfSum) {
  const auto t = matched_3connected_series(order / 2 + 1);
  GraphSeriesBundle b;
  b.general = solve_network_system(t.T0, t.T1, order, NetworkVariant::General, h);
  b.bridgeless = solve_network_system(t.T0, t.T1, order, NetworkVariant::Bridgeless, h);
  b.all = all_graphs_series(b.general.graphs);
  return b;
}

/// Rows (n, G_n, C_n, A_n) for even n in [2, max_n].
inline std::vector<LabeledCountsRow> labeled_counts_table(std::size_t max_n,
                                                          HSubstitution h = HSubstitution::SquareOfSum) {
  if (max_n % 2 != 0 || max_n < 2) throw UsageError("labeled_counts_table: max_n must be even and >= 2");
  const GraphSeriesBundle b = solve_graph_series(max_n, h);
  std::vector<LabeledCountsRow> rows;
  for (std::size_t n = 2; n <= max_n; n += 2) {
    rows.push_back({n, labeled_count(b.all, n), labeled_count(b.general.graphs, n),
                    labeled_count(b.bridgeless.graphs, n)});
  }
  return rows;
}

}  // namespace cubicpm
