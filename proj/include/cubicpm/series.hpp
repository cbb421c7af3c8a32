#pragma once

// Truncated formal power series over exact rationals.
//
// A Series of order N stores the coefficients of z^0 .. z^N. Binary
// operations require equal orders; nothing here ever changes an order
// silently. Use truncated() to move between orders explicitly.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cubicpm/errors.hpp"

namespace cubicpm {

using Integer = mpz_class;
using Rational = mpq_class;

class Series {
 public:
  Series() : Series(0) {}
  explicit Series(std::size_t order) : coeffs_(order + 1) {}

  /// Coefficients beyond `coeffs` are zero; extra coefficients are a usage error.
  Series(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order + 1) {
      throw UsageError("Series: more coefficients than order+1");
    }
    coeffs_.resize(order + 1);
  }

  static Series from_integers(std::size_t order, std::initializer_list<long> values) {
    std::vector<Rational> c;
    c.reserve(values.size());
    for (long v : values) c.emplace_back(v);
    if (c.size() > order + 1) c.resize(order + 1);
    return Series(order, std::move(c));
  }

  static Series constant(std::size_t order, const Rational& c) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// c * z^k, or zero if k exceeds the order.
  static Series monomial(std::size_t order, std::size_t k, const Rational& c = 1) {
    Series s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient, or order()+1 for the zero series.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) != 0) return i;
    }
    return coeffs_.size();
  }

  bool is_zero() const { return valuation() > order(); }

  bool is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& q) { return q.get_den() == 1; });
  }

  bool is_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& q) { return sgn(q) >= 0; });
  }

  /// Same series at another order: drops high coefficients or pads with zeros.
  Series truncated(std::size_t new_order) const {
    std::vector<Rational> c(coeffs_.begin(),
                            coeffs_.begin() + std::min(coeffs_.size(), new_order + 1));
    return Series(new_order, std::move(c));
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

enum class SeriesOp { Add, Sub, Mul };

namespace detail {

inline void require_same_order(const Series& a, const Series& b, const char* what) {
  if (a.order() != b.order()) {
    throw UsageError(std::string(what) + ": order mismatch (" + std::to_string(a.order()) +
                     " vs " + std::to_string(b.order()) + ")");
  }
}

inline Series multiply(const Series& a, const Series& b) {
  const std::size_t n = a.order();
  const std::size_t va = a.valuation();
  const std::size_t vb = b.valuation();
  Series out(n);
  if (va + vb > n) return out;
  if (a.is_integral() && b.is_integral()) {
    // Integer fast path: avoids a gcd per product.
    std::vector<Integer> acc(n + 1);
    for (std::size_t i = va; i + vb <= n; ++i) {
      const Integer& ai = a[i].get_num();
      if (sgn(ai) == 0) continue;
      for (std::size_t j = vb; i + j <= n; ++j) {
        const Integer& bj = b[j].get_num();
        if (sgn(bj) != 0) mpz_addmul(acc[i + j].get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
      }
    }
    for (std::size_t k = 0; k <= n; ++k) out[k] = Rational(acc[k]);
    return out;
  }
  Rational term;
  for (std::size_t i = va; i + vb <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = vb; i + j <= n; ++j) {
      if (sgn(b[j]) == 0) continue;
      term = a[i] * b[j];
      out[i + j] += term;
    }
  }
  return out;
}

/// 1/b for b(0) != 0.
inline Series reciprocal(const Series& b) {
  const std::size_t n = b.order();
  if (sgn(b[0]) == 0) throw DomainError("reciprocal: zero constant term");
  Series r(n);
  const Rational inv0 = 1 / b[0];
  r[0] = inv0;
  Rational acc;
  for (std::size_t k = 1; k <= n; ++k) {
    acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (sgn(b[i]) != 0) acc += b[i] * r[k - i];
    }
    r[k] = -acc * inv0;
  }
  return r;
}

}  // namespace detail

/// Coefficientwise add/sub, or the Cauchy product truncated to the common order.
inline Series combine(const Series& a, const Series& b, SeriesOp op) {
  detail::require_same_order(a, b, "combine");
  if (op == SeriesOp::Mul) return detail::multiply(a, b);
  Series out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    out[i] = op == SeriesOp::Add ? Rational(a[i] + b[i]) : Rational(a[i] - b[i]);
  }
  return out;
}

inline Series operator+(const Series& a, const Series& b) { return combine(a, b, SeriesOp::Add); }
inline Series operator-(const Series& a, const Series& b) { return combine(a, b, SeriesOp::Sub); }
inline Series operator*(const Series& a, const Series& b) { return combine(a, b, SeriesOp::Mul); }

inline Series operator*(const Rational& c, const Series& a) {
  Series out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) out[i] = c * a[i];
  return out;
}

inline Series operator-(const Series& a) { return Rational(-1) * a; }

/// 1 + a, the shape that shows up in every substitution of the decomposition systems.
inline Series one_plus(const Series& a) {
  Series out = a;
  out[0] += 1;
  return out;
}

/// f(g(z)) by Horner evaluation. Requires g(0) = 0.
inline Series compose(const Series& f, const Series& g) {
  detail::require_same_order(f, g, "compose");
  if (sgn(g[0]) != 0) throw DomainError("compose: inner series has nonzero constant term");
  const std::size_t n = f.order();
  // Coefficients of f above n / val(g) cannot reach the result.
  const std::size_t vg = g.valuation();
  if (vg > n) return Series::constant(n, f[0]);
  std::size_t top = n / vg;
  while (top > 0 && sgn(f[top]) == 0) --top;
  Series acc = Series::constant(n, f[top]);
  for (std::size_t i = top; i-- > 0;) {
    acc = acc * g;
    acc[0] += f[i];
  }
  return acc;
}

/// a / b. When b(0) = 0 with valuation k, a must be divisible by z^k and the
/// result has order a.order() - k.
inline Series divide(const Series& a, const Series& b) {
  detail::require_same_order(a, b, "divide");
  if (b.is_zero()) throw DomainError("divide: division by the zero series");
  const std::size_t k = b.valuation();
  if (k == 0) return a * detail::reciprocal(b);
  if (a.valuation() < k) throw DomainError("divide: numerator not divisible by z^" + std::to_string(k));
  const std::size_t n = a.order() - k;
  std::vector<Rational> an(a.coeffs().begin() + static_cast<std::ptrdiff_t>(k), a.coeffs().end());
  std::vector<Rational> bn(b.coeffs().begin() + static_cast<std::ptrdiff_t>(k), b.coeffs().end());
  return Series(n, std::move(an)) * detail::reciprocal(Series(n, std::move(bn)));
}

/// exp(f) for f(0) = 0, via g' = f' g.
inline Series exp_series(const Series& f) {
  if (sgn(f[0]) != 0) throw DomainError("exp_series: nonzero constant term");
  const std::size_t n = f.order();
  Series g(n);
  g[0] = 1;
  Rational acc;
  for (std::size_t m = 1; m <= n; ++m) {
    acc = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      if (sgn(f[k]) != 0) acc += Rational(static_cast<long>(k)) * f[k] * g[m - k];
    }
    g[m] = acc / static_cast<long>(m);
  }
  return g;
}

/// Inverse of the pointing operator f -> z f'(z): coefficient n is divided by n.
inline Series integrate_pointed(const Series& pointed) {
  if (sgn(pointed[0]) != 0) throw DomainError("integrate_pointed: nonzero constant term");
  Series out(pointed.order());
  for (std::size_t m = 1; m <= pointed.order(); ++m) out[m] = pointed[m] / static_cast<long>(m);
  return out;
}

/// z f'(z).
inline Series pointed(const Series& f) {
  Series out(f.order());
  for (std::size_t m = 1; m <= f.order(); ++m) out[m] = f[m] * static_cast<long>(m);
  return out;
}

// ---------------------------------------------------------------------------
// Bivariate integer polynomials p(y, z).

class BivariatePoly {
 public:
  using Key = std::pair<int, int>;  // (degree in y, degree in z)

  BivariatePoly() = default;

  /// Terms as {y-degree, z-degree, coefficient}; repeated keys accumulate.
  BivariatePoly(std::initializer_list<std::tuple<int, int, long>> terms) {
    for (const auto& [dy, dz, c] : terms) add_term(dy, dz, Integer(c));
  }

  void add_term(int dy, int dz, const Integer& c) {
    if (dy < 0 || dz < 0) throw UsageError("BivariatePoly: negative degree");
    Integer& slot = coeffs_[{dy, dz}];
    slot += c;
    if (sgn(slot) == 0) coeffs_.erase({dy, dz});
  }

  const std::map<Key, Integer>& terms() const { return coeffs_; }

  int degree_y() const {
    int d = 0;
    for (const auto& [k, c] : coeffs_) d = std::max(d, k.first);
    return d;
  }

  BivariatePoly derivative_y() const {
    BivariatePoly out;
    for (const auto& [k, c] : coeffs_) {
      if (k.first > 0) out.add_term(k.first - 1, k.second, c * k.first);
    }
    return out;
  }

  /// Coefficient of y^i as a series in z of the given order.
  Series coefficient_of_y(int i, std::size_t order) const {
    Series s(order);
    for (const auto& [k, c] : coeffs_) {
      if (k.first == i && static_cast<std::size_t>(k.second) <= order) s[k.second] += Rational(c);
    }
    return s;
  }

  /// p(y(z), z) truncated to y's order.
  Series evaluate(const Series& y) const {
    const std::size_t n = y.order();
    const int d = degree_y();
    Series acc = coefficient_of_y(d, n);
    for (int i = d - 1; i >= 0; --i) acc = acc * y + coefficient_of_y(i, n);
    return acc;
  }

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  std::map<Key, Integer> coeffs_;
};

/// First index where p(y(z), z) has a nonzero coefficient, or nullopt when the
/// residual vanishes through z^order.
inline std::optional<std::size_t> residual_valuation(const Series& y, const BivariatePoly& p) {
  const Series r = p.evaluate(y);
  const std::size_t v = r.valuation();
  if (v > r.order()) return std::nullopt;
  return v;
}

// ---------------------------------------------------------------------------
// Solvers.

/// Right-hand side of y = F(z, y), evaluated on a full tuple of series.
using SeriesSystem = std::function<std::vector<Series>(std::span<const Series>)>;

/// Iterates y <- F(y) from y = 0 until two consecutive iterates are equal.
/// The right-hand sides must have nonnegative coefficients and gain a power
/// of z per round (possibly over several rounds). Throws DivergenceError after
/// 4(order+1) rounds and NegativeCoefficientError if the fixed point has a
/// negative coefficient.
inline std::vector<Series> solve_fixed_point(const SeriesSystem& system, std::size_t unknowns,
                                             std::size_t order) {
  std::vector<Series> current(unknowns, Series(order));
  const std::size_t max_rounds = 4 * (order + 1);
  for (std::size_t round = 0; round < max_rounds; ++round) {
    std::vector<Series> next = system(current);
    if (next.size() != unknowns) throw UsageError("solve_fixed_point: system returned wrong arity");
    for (const Series& s : next) {
      if (s.order() != order) throw UsageError("solve_fixed_point: system changed the order");
    }
    if (next == current) {
      for (std::size_t i = 0; i < unknowns; ++i) {
        if (!current[i].is_nonnegative()) {
          throw NegativeCoefficientError("solve_fixed_point: unknown " + std::to_string(i) +
                                         " has a negative coefficient");
        }
      }
      return current;
    }
    current = std::move(next);
  }
  throw DivergenceError("solve_fixed_point: no stabilization after " + std::to_string(max_rounds) +
                        " rounds");
}

/// Power-series root y(z) of p(y, z) = 0 extending `seed` (the first
/// coefficients of the wanted branch). Uses Newton lifting when dp/dy is a
/// unit along the branch and linear undetermined coefficients otherwise.
inline Series solve_algebraic(const BivariatePoly& p, std::span<const Rational> seed,
                              std::size_t order) {
  if (seed.empty()) throw UsageError("solve_algebraic: empty seed");
  const std::size_t k = seed.size();
  if (k > order + 1) throw UsageError("solve_algebraic: seed longer than order+1");
  const BivariatePoly dp = p.derivative_y();
  std::vector<Rational> seed_coeffs(seed.begin(), seed.end());

  // Valuation of dp/dy along the branch is fixed by the seed once k > v.
  const Series seed_series(order, seed_coeffs);
  const std::size_t v = dp.evaluate(seed_series).valuation();
  if (v > order || v >= k) {
    throw NeedsLongerSeedError("solve_algebraic: dp/dy degenerate beyond the seed (valuation " +
                               std::to_string(v) + ", seed length " + std::to_string(k) + ")");
  }
  const std::size_t work = order + v;
  Series y(work, seed_coeffs);
  {
    const Series r = p.evaluate(y);
    const std::size_t need = std::min(k + v, work + 1);
    if (r.valuation() < need) {
      throw BranchError("solve_algebraic: seed is not a prefix of a root branch (residual at z^" +
                        std::to_string(r.valuation()) + ")");
    }
  }

  if (v == 0) {
    // Newton: the number of correct coefficients doubles per step.
    std::size_t correct = k;
    while (correct <= order) {
      correct = std::min(2 * correct, order + 1);
      const Series yw = y.truncated(correct - 1);
      const Series step = divide(p.evaluate(yw), dp.evaluate(yw));
      y = (yw - step).truncated(work);
    }
  } else {
    const Rational lead = dp.evaluate(y)[v];
    for (std::size_t m = k; m <= order; ++m) {
      const Series r = p.evaluate(y);
      y[m] = -r[m + v] / lead;
    }
  }

  Series result = y.truncated(order);
  if (residual_valuation(result, p).has_value()) {
    throw InternalError("solve_algebraic: residual does not vanish after lifting");
  }
  return result;
}

// ---------------------------------------------------------------------------
// JSON: {"order": N, "coeffs": [["num", "den"], ...]} with decimal strings.

inline nlohmann::json to_json(const Series& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& q : s.coeffs()) {
    coeffs.push_back({q.get_num().get_str(), q.get_den().get_str()});
  }
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

inline Series series_from_json(const nlohmann::json& j) {
  const auto order = j.at("order").get<std::size_t>();
  const auto& arr = j.at("coeffs");
  if (arr.size() != order + 1) throw UsageError("series_from_json: coeffs length != order+1");
  std::vector<Rational> c;
  c.reserve(arr.size());
  for (const auto& pair : arr) {
    Rational q(Integer(pair.at(0).get<std::string>()), Integer(pair.at(1).get<std::string>()));
    if (sgn(q.get_den()) == 0) throw UsageError("series_from_json: zero denominator");
    q.canonicalize();
    c.push_back(q);
  }
  return Series(order, std::move(c));
}

}  // namespace cubicpm
