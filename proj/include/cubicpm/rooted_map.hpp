#pragma once

// Rooted planar maps as rotation systems on darts. Edge i owns darts 2i and
// 2i + 1, so alpha(d) = d ^ 1; sigma rotates darts counterclockwise around
// their vertex. Faces are the cycles of phi = sigma o alpha.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cubicpm/errors.hpp"

namespace cubicpm {

inline constexpr int alpha(int d) { return d ^ 1; }
inline constexpr int edge_of(int d) { return d >> 1; }

struct RootedMap {
  std::vector<int> sigma;
  int root = 0;

  int num_darts() const { return static_cast<int>(sigma.size()); }
  int num_edges() const { return num_darts() / 2; }
  int phi(int d) const { return sigma[alpha(d)]; }

  auto operator<=>(const RootedMap&) const = default;
};

/// Edge ids, kept sorted.
struct Matching {
  std::vector<int> edges;

  bool contains(int e) const { return std::binary_search(edges.begin(), edges.end(), e); }
  auto operator<=>(const Matching&) const = default;
};

/// Cycles of a permutation on darts, numbered by increasing minimal dart.
/// Each cycle is listed from its minimal dart.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  std::vector<int> index;  // dart -> cycle

  std::size_t size() const { return cycles.size(); }
};

template <typename Next>
CycleDecomposition cycles_of(int darts, Next next) {
  CycleDecomposition out;
  out.index.assign(static_cast<std::size_t>(darts), -1);
  for (int d = 0; d < darts; ++d) {
    if (out.index[d] >= 0) continue;
    std::vector<int> cyc;
    int x = d;
    do {
      out.index[x] = static_cast<int>(out.cycles.size());
      cyc.push_back(x);
      x = next(x);
    } while (x != d);
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

inline CycleDecomposition vertices(const RootedMap& m) {
  return cycles_of(m.num_darts(), [&](int d) { return m.sigma[d]; });
}

inline CycleDecomposition faces(const RootedMap& m) {
  return cycles_of(m.num_darts(), [&](int d) { return m.phi(d); });
}

/// V - E + F.
inline int euler_characteristic(const RootedMap& m) {
  return static_cast<int>(vertices(m).size()) - m.num_edges() + static_cast<int>(faces(m).size());
}

inline bool is_permutation(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

inline bool is_connected(const RootedMap& m) {
  const int n = m.num_darts();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{m.root};
  seen[m.root] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int e : {alpha(d), m.sigma[d]}) {
      if (!seen[e]) {
        seen[e] = 1;
        ++count;
        stack.push_back(e);
      }
    }
  }
  return count == n;
}

/// Throws UsageError unless m is a connected planar rooted map.
inline void validate(const RootedMap& m) {
  if (m.num_darts() == 0 || m.num_darts() % 2 != 0) throw UsageError("map: dart count must be even and positive");
  if (!is_permutation(m.sigma)) throw UsageError("map: sigma is not a permutation");
  if (m.root < 0 || m.root >= m.num_darts()) throw UsageError("map: root out of range");
  if (!is_connected(m)) throw UsageError("map: not connected");
  if (euler_characteristic(m) != 2) throw UsageError("map: not planar (V - E + F != 2)");
}

inline bool is_regular(const RootedMap& m, std::size_t k) {
  const auto v = vertices(m);
  return std::all_of(v.cycles.begin(), v.cycles.end(), [k](const auto& c) { return c.size() == k; });
}

struct Canonical {
  RootedMap map;
  std::vector<int> relabel;  // old dart -> new dart
};

/// Breadth-first relabeling from the root: root -> 0, alpha(root) -> 1, and
/// darts are visited in label order, the first unseen sigma-image taking the
/// next free pair. Two rooted maps are isomorphic iff their canonical forms
/// are equal.
inline Canonical canonicalize(const RootedMap& m) {
  const int n = m.num_darts();
  Canonical out;
  out.relabel.assign(n, -1);
  std::vector<int> order;
  order.reserve(n);
  auto take = [&](int d) {
    out.relabel[d] = static_cast<int>(order.size());
    order.push_back(d);
    out.relabel[alpha(d)] = static_cast<int>(order.size());
    order.push_back(alpha(d));
  };
  take(m.root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int s = m.sigma[order[i]];
    if (out.relabel[s] < 0) take(s);
  }
  if (static_cast<int>(order.size()) != n) throw UsageError("canonicalize: map is not connected");
  out.map.root = 0;
  out.map.sigma.assign(n, 0);
  for (int d = 0; d < n; ++d) out.map.sigma[out.relabel[d]] = out.relabel[m.sigma[d]];
  return out;
}

inline RootedMap canonical_form(const RootedMap& m) { return canonicalize(m).map; }

inline Matching relabel_matching(const Matching& a, const std::vector<int>& relabel) {
  Matching out;
  for (int e : a.edges) out.edges.push_back(edge_of(relabel[2 * e]));
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

/// A map carrying a distinguished edge set (a perfect matching, or the red
/// edges of a truncation).
struct MatchedMap {
  RootedMap map;
  Matching matching;
  auto operator<=>(const MatchedMap&) const = default;
};

inline MatchedMap canonicalize(const MatchedMap& mm) {
  const Canonical c = canonicalize(mm.map);
  return {c.map, relabel_matching(mm.matching, c.relabel)};
}

/// Relabels darts by `relabel` (old -> new, a bijection respecting alpha pairs).
inline RootedMap relabeled(const RootedMap& m, const std::vector<int>& relabel) {
  RootedMap out;
  out.sigma.assign(m.sigma.size(), 0);
  for (int d = 0; d < m.num_darts(); ++d) out.sigma[relabel[d]] = relabel[m.sigma[d]];
  out.root = relabel[m.root];
  return out;
}

/// Dual map: vertices are the faces, the rotation is sigma o alpha, and the
/// root moves to alpha(root) so that the dual root vertex is the face holding
/// alpha(root) (the outer face). dual(dual(m)) == m dart for dart.
inline RootedMap dual(const RootedMap& m) {
  RootedMap out;
  out.sigma.resize(m.sigma.size());
  for (int d = 0; d < m.num_darts(); ++d) out.sigma[d] = m.phi(d);
  out.root = alpha(m.root);
  return out;
}

// JSON: {"darts": 2E, "sigma": [[d, d, d], ...], "root": r, "matching": [...], "red": [...]}

inline nlohmann::json to_json(const RootedMap& m) {
  nlohmann::json j;
  j["darts"] = m.num_darts();
  j["sigma"] = vertices(m).cycles;
  j["root"] = m.root;
  return j;
}

inline nlohmann::json to_json(const MatchedMap& mm, const char* key = "matching") {
  nlohmann::json j = to_json(mm.map);
  j[key] = mm.matching.edges;
  return j;
}

inline RootedMap map_from_json(const nlohmann::json& j) {
  try {
    RootedMap m;
    const int darts = j.at("darts").get<int>();
    if (darts <= 0 || darts % 2 != 0) throw UsageError("map json: bad dart count");
    m.sigma.assign(darts, -1);
    for (const auto& cyc : j.at("sigma")) {
      const auto c = cyc.get<std::vector<int>>();
      for (std::size_t i = 0; i < c.size(); ++i) {
        const int d = c[i];
        if (d < 0 || d >= darts || m.sigma[d] != -1) throw UsageError("map json: bad sigma cycles");
        m.sigma[d] = c[(i + 1) % c.size()];
      }
    }
    if (std::find(m.sigma.begin(), m.sigma.end(), -1) != m.sigma.end()) {
      throw UsageError("map json: sigma cycles do not cover all darts");
    }
    m.root = j.value("root", 0);
    validate(m);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("map json: ") + e.what());
  }
}

inline MatchedMap matched_map_from_json(const nlohmann::json& j) {
  MatchedMap mm{map_from_json(j), {}};
  const char* key = j.contains("red") ? "red" : "matching";
  if (j.contains(key)) {
    mm.matching.edges = j.at(key).get<std::vector<int>>();
    std::sort(mm.matching.edges.begin(), mm.matching.edges.end());
    for (int e : mm.matching.edges) {
      if (e < 0 || e >= mm.map.num_edges()) throw UsageError("map json: edge id out of range");
    }
  }
  return mm;
}

}  // namespace cubicpm
