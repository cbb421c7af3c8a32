#pragma once

// Brute-force ground truth on enumerated maps: perfect matchings, bridges,
// 3-connectivity, duals, and matched censuses by connectivity class.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubicpm/errors.hpp"
#include "cubicpm/map_enumeration.hpp"
#include "cubicpm/rooted_map.hpp"
#include "cubicpm/series.hpp"

namespace cubicpm {

/// Underlying multigraph: vertex ids from vertices(m), one entry per edge.
struct UnderlyingGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

inline UnderlyingGraph underlying_graph(const RootedMap& m) {
  const auto v = vertices(m);
  UnderlyingGraph g;
  g.num_vertices = static_cast<int>(v.size());
  for (int e = 0; e < m.num_edges(); ++e) g.edges.emplace_back(v.index[2 * e], v.index[2 * e + 1]);
  return g;
}

namespace detail {

// Components of g ignoring edge `skip_edge` and vertices flagged in `removed`.
inline int count_components(const UnderlyingGraph& g, int skip_edge, const std::vector<char>& removed) {
  std::vector<int> parent(g.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (e == skip_edge) continue;
    const auto [a, b] = g.edges[e];
    if (removed[a] || removed[b]) continue;
    parent[find(a)] = find(b);
  }
  int c = 0;
  for (int x = 0; x < g.num_vertices; ++x) {
    if (!removed[x] && find(x) == x) ++c;
  }
  return c;
}

}  // namespace detail

inline bool is_bridge(const UnderlyingGraph& g, int e) {
  if (g.edges[e].first == g.edges[e].second) return false;
  const std::vector<char> none(g.num_vertices, 0);
  return detail::count_components(g, e, none) > detail::count_components(g, -1, none);
}

inline bool has_bridge(const RootedMap& m) {
  const UnderlyingGraph g = underlying_graph(m);
  for (int e = 0; e < m.num_edges(); ++e) {
    if (is_bridge(g, e)) return true;
  }
  return false;
}

enum class Connectivity { HasBridge, Bridgeless, ThreeConnected };

inline std::string_view to_string(Connectivity c) {
  switch (c) {
    case Connectivity::HasBridge: return "has_bridge";
    case Connectivity::Bridgeless: return "bridgeless";
    case Connectivity::ThreeConnected: return "three_connected";
  }
  return "?";
}

/// Simple, at least four vertices, and no separating pair of vertices.
inline bool is_three_connected(const UnderlyingGraph& g) {
  if (g.num_vertices < 4) return false;
  std::vector<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a == b) return false;
    seen.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  std::vector<char> removed(g.num_vertices, 0);
  if (detail::count_components(g, -1, removed) != 1) return false;
  for (int x = 0; x < g.num_vertices; ++x) {
    for (int y = x + 1; y < g.num_vertices; ++y) {
      removed[x] = removed[y] = 1;
      const int c = detail::count_components(g, -1, removed);
      removed[x] = removed[y] = 0;
      if (c != 1) return false;
    }
  }
  return true;
}

inline Connectivity classify_connectivity(const RootedMap& m) {
  const UnderlyingGraph g = underlying_graph(m);
  for (int e = 0; e < m.num_edges(); ++e) {
    if (is_bridge(g, e)) return Connectivity::HasBridge;
  }
  return is_three_connected(g) ? Connectivity::ThreeConnected : Connectivity::Bridgeless;
}

enum class MapFilter { All, Bridgeless, ThreeConnected };

inline std::string_view to_string(MapFilter f) {
  switch (f) {
    case MapFilter::All: return "all";
    case MapFilter::Bridgeless: return "bridgeless";
    case MapFilter::ThreeConnected: return "three_connected";
  }
  return "?";
}

inline MapFilter map_filter_from_string(std::string_view s) {
  for (MapFilter f : {MapFilter::All, MapFilter::Bridgeless, MapFilter::ThreeConnected}) {
    if (to_string(f) == s) return f;
  }
  throw UsageError("unknown map filter: " + std::string(s));
}

inline bool passes(Connectivity c, MapFilter filter) {
  switch (filter) {
    case MapFilter::All: return true;
    case MapFilter::Bridgeless: return c != Connectivity::HasBridge;
    case MapFilter::ThreeConnected: return c == Connectivity::ThreeConnected;
  }
  return false;
}

/// Every perfect matching of a cubic map, by backtracking on the lowest
/// unmatched vertex. Loops never enter a matching.
inline std::vector<Matching> list_perfect_matchings(const RootedMap& m) {
  const auto v = vertices(m);
  for (const auto& c : v.cycles) {
    if (c.size() != 3) throw UsageError("list_perfect_matchings: map is not cubic");
  }
  const int nv = static_cast<int>(v.size());
  std::vector<char> matched(nv, 0);
  std::vector<int> chosen;
  std::vector<Matching> out;
  auto rec = [&](auto&& self, int from) -> void {
    while (from < nv && matched[from]) ++from;
    if (from == nv) {
      Matching a{chosen};
      std::sort(a.edges.begin(), a.edges.end());
      out.push_back(std::move(a));
      return;
    }
    for (int d : v.cycles[from]) {
      const int w = v.index[alpha(d)];
      if (w == from || matched[w]) continue;
      // Parallel edges are distinct matchings; each dart is its own edge.
      matched[from] = matched[w] = 1;
      chosen.push_back(edge_of(d));
      self(self, from + 1);
      chosen.pop_back();
      matched[from] = matched[w] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_perfect_matching(const RootedMap& m, const Matching& a) {
  const auto v = vertices(m);
  std::vector<int> hits(v.size(), 0);
  for (int e : a.edges) {
    if (e < 0 || e >= m.num_edges()) return false;
    const int x = v.index[2 * e], y = v.index[2 * e + 1];
    if (x == y) return false;
    ++hits[x];
    ++hits[y];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

/// The triangulation dual to a cubic map.
inline RootedMap dual_triangulation(const RootedMap& m) {
  if (!is_regular(m, 3)) throw UsageError("dual_triangulation: map is not cubic");
  return dual(m);
}

inline bool has_loop(const RootedMap& m) {
  const auto v = vertices(m);
  for (int e = 0; e < m.num_edges(); ++e) {
    if (v.index[2 * e] == v.index[2 * e + 1]) return true;
  }
  return false;
}

/// Sum of matching counts over the rooted cubic maps of size n in the class.
inline Integer matched_census(int n, MapFilter filter, unsigned threads = 1, bool allow_large = false) {
  return reduce_rooted_maps<Integer>(cubic_family(n, allow_large), threads, [filter](const RootedMap& m) {
    if (!passes(classify_connectivity(m), filter)) return Integer(0);
    return Integer(static_cast<unsigned long>(list_perfect_matchings(m).size()));
  });
}

}  // namespace cubicpm
