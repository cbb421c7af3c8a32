#pragma once

// Numeric side: certified smallest positive roots by Sturm sequences with
// exact rational bisection, the growth constants derived from them, the
// transfer-theorem estimate, and empirical growth fits on exact counts.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "cubicpm/errors.hpp"
#include "cubicpm/map_series.hpp"
#include "cubicpm/polynomials.hpp"
#include "cubicpm/series.hpp"

namespace cubicpm {

/// Coefficients in ascending degree, trailing zeros trimmed.
using QPoly = std::vector<Rational>;

namespace poly {

inline QPoly trim(QPoly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

inline QPoly from_ints(const std::vector<long>& c) {
  QPoly p;
  for (long x : c) p.emplace_back(x);
  return trim(p);
}

inline int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Rational eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return trim(d);
}

inline QPoly remainder(QPoly a, const QPoly& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  a = trim(a);
  while (degree(a) >= degree(b)) {
    const Rational q = a.back() / b.back();
    const int shift = degree(a) - degree(b);
    for (int i = 0; i <= degree(b); ++i) a[i + shift] -= q * b[i];
    a.pop_back();
    a = trim(a);
  }
  return a;
}

inline QPoly gcd(QPoly a, QPoly b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    QPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

/// p, p', then negated remainders.
inline std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> s{trim(p), derivative(p)};
  while (!s.back().empty()) {
    QPoly r = remainder(s[s.size() - 2], s.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    s.push_back(std::move(r));
  }
  if (s.back().empty()) s.pop_back();
  return s;
}

inline int sign_changes(const std::vector<QPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : seq) {
    const int s = sgn(eval(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Distinct real roots in (a, b].
inline int count_roots(const std::vector<QPoly>& seq, const Rational& a, const Rational& b) {
  return sign_changes(seq, a) - sign_changes(seq, b);
}

/// 1 + max |a_i / a_n|.
inline Rational cauchy_bound(const QPoly& p) {
  Rational m = 0;
  for (int i = 0; i < degree(p); ++i) m = std::max(m, Rational(abs(p[i] / p.back())));
  return 1 + m;
}

}  // namespace poly

/// A real number known to lie in [mid - rad, mid + rad].
struct RealBall {
  Rational mid, rad;

  Rational lo() const { return mid - rad; }
  Rational hi() const { return mid + rad; }
  double value() const { return mid.get_d(); }
  double radius() const { return rad.get_d(); }

  static RealBall from_interval(const Rational& lo, const Rational& hi) {
    Rational m = (lo + hi) / 2, r = (hi - lo) / 2;
    m.canonicalize();
    r.canonicalize();
    return {m, r};
  }
  static RealBall from_decimal(double mid, double rad) { return {Rational(mid), Rational(rad)}; }

  /// True when every point of the ball is within tol of x.
  bool within(double x, double tol) const {
    const Rational xr(x), t(tol);
    return lo() >= xr - t && hi() <= xr + t;
  }
};

/// Exact value of a plain decimal literal such as "1.119" or "-0.5".
inline Rational parse_decimal(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(Integer(s, 10));
  const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  Rational q(Integer(digits, 10), Integer("1" + std::string(s.size() - dot - 1, '0'), 10));
  q.canonicalize();
  return q;
}

/// Quotient of two balls contained in the positive reals.
inline RealBall divide(const RealBall& a, const RealBall& b) {
  if (sgn(a.lo()) <= 0 || sgn(b.lo()) <= 0) throw DomainError("ball division needs positive balls");
  return RealBall::from_interval(a.lo() / b.hi(), a.hi() / b.lo());
}

/// Default working radius, 2^-128.
inline Rational default_radius() {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, 128);
  return Rational(Integer(1), den);
}

/// The least positive real root, isolated by Sturm counts and bisected with
/// exact rational arithmetic until the ball radius is at most `radius`.
inline RealBall smallest_positive_root(const QPoly& p_in, const Rational& radius = default_radius()) {
  const QPoly p = poly::trim(p_in);
  if (poly::degree(p) < 1) throw DomainError("smallest_positive_root: constant polynomial");
  if (sgn(radius) <= 0) throw UsageError("smallest_positive_root: radius must be positive");
  const auto seq = poly::sturm_sequence(p);
  Rational lo = 0, hi = poly::cauchy_bound(p);
  if (sgn(poly::eval(p, lo)) == 0) throw DomainError("smallest_positive_root: zero is a root");
  if (poly::count_roots(seq, lo, hi) == 0) throw DomainError("smallest_positive_root: no positive root");
  // Invariant: no root in (0, lo], at least one in (lo, hi].
  while ((hi - lo) / 2 > radius) {
    Rational m = (lo + hi) / 2;
    m.canonicalize();
    if (poly::count_roots(seq, lo, m) > 0) {
      hi = m;
    } else {
      lo = m;
    }
  }
  return RealBall::from_interval(lo, hi);
}

inline RealBall smallest_positive_root(const std::vector<long>& p, const Rational& radius = default_radius()) {
  return smallest_positive_root(poly::from_ints(p), radius);
}

/// True when the root inside `ball` is simple: gcd(p, p') has no root there.
inline bool root_is_simple(const QPoly& p, const RealBall& ball) {
  const QPoly g = poly::gcd(p, poly::derivative(p));
  if (poly::degree(g) < 1) return true;
  const auto seq = poly::sturm_sequence(g);
  return poly::count_roots(seq, ball.lo() - ball.rad, ball.hi()) == 0;
}

/// Exact-sign check that p changes sign across the ball.
inline bool brackets_sign_change(const QPoly& p, const RealBall& ball) {
  return sgn(poly::eval(p, ball.lo())) * sgn(poly::eval(p, ball.hi())) <= 0;
}

struct NamedConstant {
  std::string name;
  RealBall ball;
  double paper_value;
  std::string note;
};

/// sigma, rho, sigma_b, rho_b from their polynomials; alpha_b as the root of
/// 2x^4 + 10x^2 - 1; alpha as the quoted decimal with radius 5e-5; then the
/// two growth ratios and the two unlabeled ratios.
inline std::vector<NamedConstant> constants_report(const Rational& radius = default_radius()) {
  const RealBall sigma = smallest_positive_root(polynomials::sigma_factor(), radius);
  const RealBall rho = smallest_positive_root(polynomials::rho_factor(), radius);
  const RealBall sigma_b = smallest_positive_root(polynomials::sigma_bridgeless_factor(), radius);
  const RealBall rho_b = smallest_positive_root(polynomials::rho_bridgeless_factor(), radius);
  const RealBall alpha_b = smallest_positive_root(polynomials::alpha_bridgeless_poly(), radius);
  const RealBall alpha{Rational(3102, 10000), Rational(5, 100000)};
  return {
      {"sigma", sigma, 0.27964, "matched connected graphs"},
      {"rho", rho, 0.31923, "connected graphs"},
      {"sigma_b", sigma_b, 0.27980, "matched bridgeless graphs"},
      {"rho_b", rho_b, 0.319523, "bridgeless graphs"},
      {"alpha_b", alpha_b, std::sqrt((3 * std::sqrt(3.0) - 5) / 2), "((3 sqrt 3 - 5) / 2)^(1/2)"},
      {"alpha", alpha, 0.3102, "quoted value, radius 5e-5"},
      {"delta", divide(rho, sigma), 1.14157, "rho / sigma"},
      {"gamma", divide(rho_b, sigma_b), 1.14196, "rho_b / sigma_b"},
      {"alpha_b_over_sigma_b", divide(alpha_b, sigma_b), 1.119, "lower bound"},
      {"alpha_over_sigma", divide(alpha, sigma), 1.109, "lower bound"},
  };
}

inline const NamedConstant& find_constant(const std::vector<NamedConstant>& all, const std::string& name) {
  for (const auto& c : all) {
    if (c.name == name) return c;
  }
  throw UsageError("unknown constant: " + name);
}

inline nlohmann::json to_json(const std::vector<NamedConstant>& all) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& c : all) {
    j[c.name] = {{"mid", c.ball.value()}, {"rad", c.ball.radius()}, {"paper_value", c.paper_value}};
  }
  return j;
}

/// log of (3 a3 / (2 sqrt(pi))) n^{-5/2} rho^{-n}; the value itself overflows
/// a double long before n = 500.
inline long double log_transfer_estimate(long double a3, long double rho, long n) {
  if (a3 <= 0 || rho <= 0 || n < 1) throw UsageError("transfer_estimate: need a3 > 0, rho > 0, n >= 1");
  const long double nn = static_cast<long double>(n);
  return std::log(3 * a3 / (2 * std::sqrt(std::numbers::pi_v<long double>))) - 2.5L * std::log(nn) -
         nn * std::log(rho);
}

/// (3 a3 / (2 sqrt(pi))) n^{-5/2} rho^{-n}.
inline long double transfer_estimate(long double a3, long double rho, long n) {
  return std::exp(log_transfer_estimate(a3, rho, n));
}

/// Natural log of a positive rational, accurate for huge values.
inline double log_of(const Rational& q) {
  if (sgn(q) <= 0) throw DomainError("log of a non-positive value");
  auto log_int = [](const Integer& z) {
    long e = 0;
    const double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(d) + static_cast<double>(e) * std::numbers::ln2;
  };
  return log_int(q.get_num()) - log_int(q.get_den());
}

struct GrowthFit {
  double growth;   // exponential base
  double polyexp;  // exponent of n
};

/// Least squares of log c_n on (1, n, log n, 1/n) over the second half of the
/// sequence. counts[i] is c_{first_index + i}.
inline GrowthFit growth_fit(const std::vector<Rational>& counts, long first_index = 1) {
  if (counts.size() < 50) throw UsageError("growth_fit: need at least 50 counts");
  if (first_index < 1) throw UsageError("growth_fit: indices must start at 1 or later");
  const std::size_t start = counts.size() / 2;
  const auto rows = static_cast<Eigen::Index>(counts.size() - start);
  Eigen::MatrixXd a(rows, 4);
  Eigen::VectorXd y(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Rational& c = counts[start + static_cast<std::size_t>(r)];
    if (sgn(c) <= 0) throw DomainError("growth_fit: non-positive count in the tail");
    const double n = static_cast<double>(first_index + static_cast<long>(start) + r);
    a(r, 0) = 1;
    a(r, 1) = n;
    a(r, 2) = std::log(n);
    a(r, 3) = 1 / n;
    y(r) = log_of(c);
  }
  const Eigen::VectorXd beta = a.colPivHouseholderQr().solve(y);
  return {std::exp(beta(1)), beta(2)};
}

/// c_1 .. c_N from the closed formula.
inline std::vector<Rational> closed_form_sequence(CountKind kind, long count) {
  std::vector<Rational> out;
  for (long n = 1; n <= count; ++n) out.emplace_back(closed_form_count(kind, static_cast<unsigned long>(n)));
  return out;
}

/// Termwise quotient of two sequences of the same length.
inline std::vector<Rational> ratio_sequence(const std::vector<Rational>& num, const std::vector<Rational>& den) {
  if (num.size() != den.size()) throw UsageError("ratio_sequence: length mismatch");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < num.size(); ++i) {
    Rational q = num[i] / den[i];
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace cubicpm
