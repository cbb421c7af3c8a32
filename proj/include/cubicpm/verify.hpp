#pragma once

// The acceptance suite: twelve checks, each comparing a recomputation
// against golden data or an independent oracle.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "cubicpm/asymptotics.hpp"
#include "cubicpm/bijections.hpp"
#include "cubicpm/golden.hpp"
#include "cubicpm/graph_oracle.hpp"
#include "cubicpm/ising.hpp"
#include "cubicpm/map_oracle.hpp"
#include "cubicpm/tables.hpp"

namespace cubicpm {

struct RunConfig {
  std::size_t order = 30;
  int max_n = 4;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "text";
  std::uint64_t seed = 0;
  bool variant_h_substitution = false;
};

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIP";
  }
  return "?";
}

struct CheckResult {
  int id = 0;
  std::string name;
  std::string source;  // where the expected values come from
  std::string expected;
  std::string got;
  CheckStatus status = CheckStatus::Pass;
  long checked = 0, failed = 0, skipped = 0;
  std::vector<std::string> notes;
  double seconds = 0;
};

inline CheckResult make_result(int id, std::string name, std::string source, std::string expected) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  r.source = std::move(source);
  r.expected = std::move(expected);
  return r;
}

namespace detail {

/// Accumulates sub-checks of one criterion; keeps the first few failures.
class Tally {
 public:
  explicit Tally(CheckResult& r) : r_(r) {}

  bool expect(bool ok, const std::string& what) {
    ++r_.checked;
    if (!ok) {
      ++r_.failed;
      if (r_.failed <= 5) r_.notes.push_back("mismatch: " + what);
    }
    return ok;
  }
  template <class A, class B>
  bool expect_eq(const A& want, const B& got, const std::string& what) {
    if (want == got) return expect(true, what);
    std::ostringstream os;
    os << what << " expected " << want << " got " << got;
    return expect(false, os.str());
  }
  void skip(const std::string& what) {
    ++r_.skipped;
    r_.notes.push_back("skipped: " + what);
  }
  void note(const std::string& s) { r_.notes.push_back(s); }

 private:
  CheckResult& r_;
};

inline void finish(CheckResult& r) {
  if (r.failed > 0) {
    r.status = CheckStatus::Fail;
  } else if (r.checked == 0) {
    r.status = CheckStatus::Skipped;
  } else {
    r.status = CheckStatus::Pass;
  }
  if (r.got.empty()) {
    std::ostringstream os;
    os << (r.checked - r.failed) << "/" << r.checked << " agree";
    if (r.skipped > 0) os << ", " << r.skipped << " skipped";
    r.got = os.str();
  }
}

inline std::string fmt(double x, int digits = 7) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

inline std::set<MatchedMap> root_matched_maps(int n, bool bridgeless_only) {
  std::set<MatchedMap> out;
  for (const auto& m : enumerate_rooted_cubic_maps(n)) {
    if (bridgeless_only && has_bridge(m)) continue;
    for (const auto& a : list_perfect_matchings(m)) {
      if (a.contains(edge_of(m.root))) out.insert({m, a});
    }
  }
  return out;
}

}  // namespace detail

/// Shared, lazily computed series so several checks reuse one solve.
class VerifyContext {
 public:
  explicit VerifyContext(RunConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.order < 10) throw UsageError("verify: --order must be at least 10");
    if (cfg_.threads < 1) throw UsageError("verify: --threads must be at least 1");
    if (cfg_.max_n < 1) throw UsageError("verify: --max-n must be at least 1");
  }

  const RunConfig& config() const { return cfg_; }

  const MapSeriesBundle& maps() {
    if (!maps_) maps_ = solve_map_series(cfg_.order);
    return *maps_;
  }
  const Series& t1() {
    if (!t1_) t1_ = matched_3connected_series(cfg_.order).T1;
    return *t1_;
  }
  /// Vertices covered by the graph tables: min(order, 20), made even.
  std::size_t graph_order() const { return std::min<std::size_t>(cfg_.order - cfg_.order % 2, 20); }

 private:
  RunConfig cfg_;
  std::optional<MapSeriesBundle> maps_;
  std::optional<Series> t1_;
};

inline CheckResult check_table1(VerifyContext& ctx) {
  CheckResult r = make_result(1, "table1 reproduction", "golden table1", "all 30 quoted values");
  detail::Tally t(r);
  const auto& b = ctx.maps();
  for (const auto& row : golden().table1) {
    const auto n = static_cast<std::size_t>(row.vertices / 2);
    const std::string at = "v=" + std::to_string(row.vertices);
    if (n > ctx.config().order) {
      t.skip(at + " beyond order");
      continue;
    }
    t.expect_eq(row.M, integral_coefficient(b.M, n), at + " M");
    t.expect_eq(row.B, integral_coefficient(b.B, n), at + " B");
    t.expect_eq(row.T, integral_coefficient(b.T, n), at + " T");
  }
  detail::finish(r);
  return r;
}

inline CheckResult check_closed_forms(VerifyContext& ctx) {
  const std::size_t order = ctx.config().order;
  CheckResult r = make_result(2, "closed formulas vs series", "closed formulas",
                "M_n and B_n equal for n <= " + std::to_string(order));
  detail::Tally t(r);
  const auto& b = ctx.maps();
  for (std::size_t n = 1; n <= order; ++n) {
    t.expect_eq(closed_form_count(CountKind::MatchedCubic, n), b.M[n], "M_" + std::to_string(n));
    t.expect_eq(closed_form_count(CountKind::MatchedBridgeless, n), b.B[n], "B_" + std::to_string(n));
  }
  detail::finish(r);
  return r;
}

inline CheckResult check_residuals(VerifyContext& ctx) {
  const std::size_t order = ctx.config().order;
  CheckResult r = make_result(3, "minimal polynomial residuals", "polynomials",
                "zero through z^" + std::to_string(order));
  detail::Tally t(r);
  auto vanish = [&](const Series& y, const BivariatePoly& p, const std::string& what) {
    const auto v = verify_minimal_polynomial(y, p);
    t.expect(!v.has_value(), what + (v ? " residual at z^" + std::to_string(*v) : ""));
  };
  vanish(ctx.maps().M, polynomials::matched_maps(), "quadratic for M");
  vanish(ctx.t1(), polynomials::matched_3connected_root_in_matching(), "sextic for T1");
  vanish(ctx.maps().B, polynomials::matched_bridgeless_maps(), "quartic for B");
  detail::finish(r);
  return r;
}

inline CheckResult check_map_oracle(VerifyContext& ctx) {
  CheckResult r = make_result(4, "map oracle census", "golden table1",
                "(6,3,0) (54,18,3) (648,156,12) (9072,1632,69)");
  detail::Tally t(r);
  const auto& cfg = ctx.config();
  std::ostringstream got;
  for (const auto& row : golden().map_census) {
    const std::string at = "2n=" + std::to_string(2 * row.n);
    if (row.n > cfg.max_n) {
      t.skip(at + " above --max-n");
      continue;
    }
    const Integer all = matched_census(row.n, MapFilter::All, cfg.threads);
    const Integer bl = matched_census(row.n, MapFilter::Bridgeless, cfg.threads);
    const Integer tc = matched_census(row.n, MapFilter::ThreeConnected, cfg.threads);
    got << "(" << all << "," << bl << "," << tc << ") ";
    t.expect_eq(Integer(row.all), all, at + " all");
    t.expect_eq(Integer(row.bridgeless), bl, at + " bridgeless");
    t.expect_eq(Integer(row.three_connected), tc, at + " 3-connected");
  }
  r.got = got.str();
  if (!r.got.empty()) r.got.pop_back();
  detail::finish(r);
  return r;
}

inline CheckResult check_ising(VerifyContext& ctx) {
  const int top = std::min(3, ctx.config().max_n);
  CheckResult r = make_result(5, "ising correspondence", "oracle",
                "#matchings = #minimal colorings, both directions identity, 2n <= 6");
  detail::Tally t(r);
  long pairs = 0;
  for (int n = 1; n <= top; ++n) {
    for (const auto& m : enumerate_rooted_cubic_maps(n)) {
      const RootedMap tri = dual_triangulation(m);
      const auto matchings = list_perfect_matchings(m);
      long colorings = 0;
      bool ok = true;
      try {
        for (const auto& a : matchings) {
          const Coloring c = coloring_from_matching(m, a);
          ok = ok && static_cast<int>(monochromatic_edges(tri, c).size()) == n && matching_from_coloring(tri, c) == a;
        }
        for_each_rooted_coloring(tri, [&](const Coloring& c, int mono) {
          if (mono != n) return;
          ++colorings;
          ok = ok && coloring_from_matching(m, matching_from_coloring(tri, c)) == c;
        });
      } catch (const std::exception& e) {
        ok = false;
        t.note(std::string("exception: ") + e.what());
      }
      t.expect(ok && colorings == static_cast<long>(matchings.size()),
               "map of size " + std::to_string(n) + " with " + std::to_string(matchings.size()) + " matchings");
      pairs += colorings;
    }
  }
  if (top < 3) t.skip("sizes above --max-n");
  r.got = std::to_string(r.checked - r.failed) + "/" + std::to_string(r.checked) + " maps, " +
          std::to_string(pairs) + " pairs";
  detail::finish(r);
  return r;
}

inline CheckResult check_bijection_contract(VerifyContext& ctx) {
  const int top = std::min(3, ctx.config().max_n);
  CheckResult r = make_result(6, "contraction fibers", "golden R_n and closed formula",
                "fibers of size 2^(n-1); M_n / 3 = 2^(n-1) R_n with R_n in {2, 9, 54}");
  detail::Tally t(r);
  const auto& rooted = golden().rooted_planar;
  for (int n = 1; n <= top; ++n) {
    const std::string at = "n=" + std::to_string(n);
    std::map<RootedMap, long> fibers;
    const auto sources = detail::root_matched_maps(n, false);
    for (const auto& mm : sources) ++fibers[contract_matching(mm)];
    const long want = 1L << (n - 1);
    long bad = 0;
    for (const auto& [f, size] : fibers) bad += size != want;
    t.expect_eq(0L, bad, at + " fibers of the wrong size");
    t.expect_eq(rooted[n - 1], static_cast<long>(fibers.size()), at + " R_n");
    t.expect_eq(closed_form_count(CountKind::RootedPlanar, n), Integer(rooted[n - 1]), at + " R_n closed");
    t.expect_eq(closed_form_count(CountKind::MatchedCubic, n), Integer(3 * want * rooted[n - 1]),
                at + " M_n = 3 2^(n-1) R_n");
  }
  if (top < 3) t.skip("sizes above --max-n");
  detail::finish(r);
  return r;
}

inline CheckResult check_bijection_flip(VerifyContext& ctx) {
  const int top = std::min(3, ctx.config().max_n);
  CheckResult r = make_result(7, "flip bijection", "golden L_n and closed formula",
                "involution, commutation, confluence over 10 orders, B_n / 3 = 2^(n-1) L_n");
  detail::Tally t(r);
  const auto& loopless = golden().loopless;
  const std::uint64_t seed0 = ctx.config().seed;
  for (int n = 1; n <= top; ++n) {
    const std::string at = "n=" + std::to_string(n);
    const auto sources = detail::root_matched_maps(n, true);
    long involution = 0, commutation = 0, confluence = 0;
    std::map<RootedMap, long> fibers;
    for (const auto& mm : sources) {
      const auto red = flippable_edges(mm);
      for (int e : red) involution += canonicalize(flip_edge(flip_edge(mm, e), e)) != mm;
      for (std::size_t i = 0; i < red.size(); ++i) {
        for (std::size_t j = i + 1; j < red.size(); ++j) {
          commutation += canonicalize(apply_flips(mm, {red[i], red[j]})) !=
                         canonicalize(apply_flips(mm, {red[j], red[i]}));
        }
      }
      const NormalizeResult first = normalize_and_recover(mm, seed0);
      for (std::uint64_t k = 1; k < 10; ++k) {
        const NormalizeResult again = normalize_and_recover(mm, seed0 + k);
        confluence += again.base != first.base || again.good != first.good;
      }
      ++fibers[first.base];
    }
    t.expect_eq(0L, involution, at + " non-involutive flips");
    t.expect_eq(0L, commutation, at + " non-commuting pairs");
    t.expect_eq(0L, confluence, at + " order-dependent normalizations");
    const long want = 1L << (n - 1);
    long bad = 0;
    for (const auto& [b, size] : fibers) bad += size != want;
    t.expect_eq(0L, bad, at + " fibers of the wrong size");
    t.expect_eq(loopless[n - 1], static_cast<long>(fibers.size()), at + " L_n");
    t.expect_eq(closed_form_count(CountKind::Loopless, n), Integer(loopless[n - 1]), at + " L_n closed");
    t.expect_eq(closed_form_count(CountKind::MatchedBridgeless, n), Integer(3 * want * loopless[n - 1]),
                at + " B_n = 3 2^(n-1) L_n");
  }
  if (top < 3) t.skip("sizes above --max-n");
  detail::finish(r);
  return r;
}

/// First (vertices, column) where two readings of table2 disagree.
inline std::optional<std::string> first_table2_divergence(const std::vector<Table2Row>& a,
                                                          const std::vector<Table2Row>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    const auto report = [&](const char* col, const Integer& x, const Integer& y) -> std::optional<std::string> {
      if (x == y) return std::nullopt;
      return "v=" + std::to_string(a[i].vertices) + " " + col + ": " + x.get_str() + " vs " + y.get_str();
    };
    if (auto d = report("G", a[i].G, b[i].G)) return d;
    if (auto d = report("C", a[i].C, b[i].C)) return d;
    if (auto d = report("A", a[i].A, b[i].A)) return d;
  }
  return std::nullopt;
}

inline CheckResult check_table2(VerifyContext& ctx) {
  CheckResult r = make_result(8, "table2 reproduction", "golden table2", "all 27 quoted values");
  detail::Tally t(r);
  const std::size_t order = ctx.graph_order();
  const bool variant = ctx.config().variant_h_substitution;
  const auto primary = table2(order, variant ? HSubstitution::SumOfSquare : HSubstitution::SquareOfSum);
  if (variant) t.note("using the (1 + D0^2) reading");
  for (const auto& row : golden().table2) {
    const std::string at = "v=" + std::to_string(row.vertices);
    const auto it = std::find_if(primary.begin(), primary.end(), [&](const Table2Row& p) {
      return p.vertices == row.vertices;
    });
    if (it == primary.end()) {
      t.skip(at + " beyond order");
      continue;
    }
    t.expect_eq(row.G, it->G, at + " G");
    t.expect_eq(row.C, it->C, at + " C");
    t.expect_eq(row.A, it->A, at + " A");
  }
  const auto other = variant ? table2(order) : table2(order, HSubstitution::SumOfSquare);
  const auto d = first_table2_divergence(variant ? other : primary, variant ? primary : other);
  t.note(d ? "(1 + D0)^2 vs (1 + D0^2) first differ at " + *d
           : "(1 + D0)^2 and (1 + D0^2) agree up to v=" + std::to_string(order));
  detail::finish(r);
  return r;
}

inline CheckResult check_graph_oracle(VerifyContext& ctx) {
  CheckResult r = make_result(9, "graph oracle census", "golden table2",
                "labeled G, C, A at n = 4, 6, 8; gap G_8 - C_8 = 315");
  detail::Tally t(r);
  const auto& cfg = ctx.config();
  std::ostringstream got;
  for (const auto& row : golden().table2) {
    if (row.vertices > 8) continue;
    const std::string at = "n=" + std::to_string(row.vertices);
    if (row.vertices > 2 * cfg.max_n) {
      t.skip(at + " above --max-n");
      continue;
    }
    const LabeledCensus c = labeled_census(row.vertices, cfg.threads);
    got << "(" << c.all << "," << c.connected << "," << c.bridgeless << ") ";
    t.expect_eq(row.G, c.all, at + " G");
    t.expect_eq(row.C, c.connected, at + " C");
    t.expect_eq(row.A, c.bridgeless, at + " A");
    if (row.vertices == 8) t.expect_eq(Integer(315), Integer(c.all - c.connected), "disconnected gap");
  }
  r.got = got.str();
  if (!r.got.empty()) r.got.pop_back();
  detail::finish(r);
  return r;
}

inline CheckResult check_constants(VerifyContext&) {
  CheckResult r = make_result(10, "growth constants", "golden constants",
                "gamma, delta, sigma, rho, sigma_b, rho_b within 1e-5; ratios >= 1.119, 1.109");
  detail::Tally t(r);
  const auto all = constants_report();
  const auto& quoted = golden().constants;
  std::ostringstream got;
  for (const char* name : {"gamma", "delta", "sigma", "rho", "sigma_b", "rho_b"}) {
    const NamedConstant& c = find_constant(all, name);
    const double want = std::stod(quoted.at(name));
    got << name << "=" << detail::fmt(c.ball.value()) << " ";
    t.expect(c.ball.within(want, 1e-5), std::string(name) + " = " + detail::fmt(c.ball.value(), 10) +
                                            " vs " + quoted.at(name));
  }
  for (const char* name : {"alpha_b_over_sigma_b", "alpha_over_sigma"}) {
    const NamedConstant& c = find_constant(all, name);
    const std::string& bound = quoted.at(name);
    const Rational lower = parse_decimal(bound);
    got << name << ">=" << detail::fmt(c.ball.lo().get_d()) << " ";
    t.expect(c.ball.lo() >= lower, std::string(name) + " lower end " + detail::fmt(c.ball.lo().get_d()) +
                                       " below " + bound);
  }
  r.got = got.str();
  r.got.pop_back();
  detail::finish(r);
  return r;
}

inline CheckResult check_growth(VerifyContext&) {
  CheckResult r = make_result(11, "growth fits", "closed formulas, n <= 500",
                "growth 24, 512/27, 2 sqrt3/3, 1024/729 within 1%; exponent -5/2 within 0.05");
  detail::Tally t(r);
  const auto m = closed_form_sequence(CountKind::MatchedCubic, 500);
  const auto c = closed_form_sequence(CountKind::Cubic, 500);
  const auto b = closed_form_sequence(CountKind::MatchedBridgeless, 500);
  const auto bc = closed_form_sequence(CountKind::Bridgeless, 500);
  std::ostringstream got;
  auto fit = [&](const char* what, const std::vector<Rational>& s, double growth, bool exponent) {
    const GrowthFit f = growth_fit(s);
    got << what << ": " << detail::fmt(f.growth, 6);
    if (exponent) got << " n^" << detail::fmt(f.polyexp, 4);
    got << "; ";
    t.expect(std::abs(f.growth / growth - 1) < 0.01, std::string(what) + " growth " + detail::fmt(f.growth));
    if (exponent) t.expect(std::abs(f.polyexp + 2.5) < 0.05, std::string(what) + " exponent " + detail::fmt(f.polyexp));
  };
  fit("M", m, 24, true);
  fit("B", b, 512.0 / 27, true);
  fit("M/cubic", ratio_sequence(m, c), 2 * std::sqrt(3.0) / 3, false);
  fit("B/bridgeless", ratio_sequence(b, bc), 1024.0 / 729, false);
  r.got = got.str();
  r.got.resize(r.got.size() - 2);
  detail::finish(r);
  return r;
}

inline CheckResult check_theta(VerifyContext&) {
  CheckResult r = make_result(12, "triangulation series", "parametrization by Lagrange inversion",
                "1, 1, 3, 13, 68; partial sums at 27/256 rise to within 1e-3 of 1/8 by order 200");
  detail::Tally t(r);
  const auto tri = tutte_triangulation_series(20);
  const long first[] = {1, 1, 3, 13, 68};
  for (unsigned long n = 1; n <= 5; ++n) {
    t.expect_eq(Rational(first[n - 1]), tri.Theta[n], "Theta_" + std::to_string(n));
  }
  for (unsigned long n = 1; n <= 20; ++n) {
    t.expect_eq(triangulation_coefficient_by_lagrange(n), tri.Theta[n], "Theta_" + std::to_string(n) + " vs Lagrange");
  }
  const Rational tau(27, 256), eighth(1, 8);
  Rational power = tau, partial = 0, previous = 0;
  long not_rising = 0;
  for (unsigned long n = 1; n <= 200; ++n) {
    partial += triangulation_coefficient_by_lagrange(n) * power;
    power *= tau;
    not_rising += partial <= previous || partial >= eighth;
    previous = partial;
  }
  t.expect_eq(0L, not_rising, "partial sums not strictly rising below 1/8");
  const double gap = Rational(eighth - partial).get_d();
  t.expect(gap < 1e-3, "1/8 - S_200 = " + detail::fmt(gap));
  r.got = "Theta_1..5 = " + tri.Theta[1].get_str() + ", " + tri.Theta[2].get_str() + ", " + tri.Theta[3].get_str() +
          ", " + tri.Theta[4].get_str() + ", " + tri.Theta[5].get_str() + "; 1/8 - S_200 = " + detail::fmt(gap, 4);
  detail::finish(r);
  return r;
}

using CheckFn = std::function<CheckResult(VerifyContext&)>;

inline const std::vector<CheckFn>& all_checks() {
  static const std::vector<CheckFn> checks{check_table1,        check_closed_forms,       check_residuals,
                                           check_map_oracle,    check_ising,              check_bijection_contract,
                                           check_bijection_flip, check_table2,            check_graph_oracle,
                                           check_constants,     check_growth,             check_theta};
  return checks;
}

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "table1 reproduction", "closed formulas vs series", "minimal polynomial residuals", "map oracle census",
      "ising correspondence", "contraction fibers", "flip bijection", "table2 reproduction",
      "graph oracle census", "growth constants", "growth fits", "triangulation series"};
  return names;
}

/// Runs one check, turning a resource cap into a skipped entry and any other
/// exception into a failure.
inline CheckResult run_check(int id, VerifyContext& ctx) {
  if (id < 1 || id > static_cast<int>(all_checks().size())) throw UsageError("no such check: " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = all_checks()[static_cast<std::size_t>(id - 1)](ctx);
  } catch (const ResourceError& e) {
    r = make_result(id, check_names()[static_cast<std::size_t>(id - 1)], "", "");
    r.status = CheckStatus::Skipped;
    r.notes.push_back(std::string("skipped: ") + e.what());
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    r = make_result(id, check_names()[static_cast<std::size_t>(id - 1)], "", "");
    r.status = CheckStatus::Fail;
    r.notes.push_back(std::string("exception: ") + e.what());
  }
  r.id = id;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

struct VerifyReport {
  std::vector<CheckResult> results;
  bool ok() const {
    return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
  }
};

inline VerifyReport run_verify(const RunConfig& cfg) {
  VerifyContext ctx(cfg);
  VerifyReport rep;
  for (int id = 1; id <= static_cast<int>(all_checks().size()); ++id) rep.results.push_back(run_check(id, ctx));
  return rep;
}

/// One line per check: "[PASS] 1 table1 reproduction: 30/30 agree (0.4 s)".
inline std::string summary_line(const CheckResult& r) {
  std::ostringstream os;
  os << "[" << to_string(r.status) << "] " << r.id << " " << r.name << ": " << r.got << " ("
     << detail::fmt(r.seconds, 3) << " s)";
  return os.str();
}

inline std::string to_text(const VerifyReport& rep) {
  std::ostringstream os;
  for (const auto& r : rep.results) {
    os << summary_line(r) << "\n";
    os << "    source: " << r.source << "\n    expected: " << r.expected << "\n";
    for (const auto& n : r.notes) os << "    " << n << "\n";
  }
  os << (rep.ok() ? "all executed checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

inline nlohmann::json to_json(const CheckResult& r) {
  return {{"id", r.id},           {"name", r.name},       {"source", r.source},   {"expected", r.expected},
          {"got", r.got},         {"status", to_string(r.status)}, {"checked", r.checked}, {"failed", r.failed},
          {"skipped", r.skipped}, {"notes", r.notes},     {"seconds", r.seconds}};
}

inline nlohmann::json to_json(const VerifyReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : rep.results) checks.push_back(to_json(r));
  return {{"ok", rep.ok()}, {"checks", checks}};
}

inline std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string to_csv(const VerifyReport& rep) {
  std::ostringstream os;
  os << "id,name,status,source,expected,got,seconds\n";
  for (const auto& r : rep.results) {
    os << r.id << "," << csv_field(r.name) << "," << to_string(r.status) << "," << csv_field(r.source) << ","
       << csv_field(r.expected) << "," << csv_field(r.got) << "," << r.seconds << "\n";
  }
  return os.str();
}

}  // namespace cubicpm
