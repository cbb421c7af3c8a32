#pragma once

// Perfect matchings of a cubic map versus 2-colorings of its dual
// triangulation with the fewest possible monochromatic edges.
//
// Colors live on the vertices of the triangulation, numbered as in
// vertices(); the triangulation shares dart and edge ids with the cubic map,
// so a monochromatic edge of T is directly an edge id of T*.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cubicpm/errors.hpp"
#include "cubicpm/map_enumeration.hpp"
#include "cubicpm/map_oracle.hpp"
#include "cubicpm/rooted_map.hpp"

namespace cubicpm {

struct Coloring {
  std::vector<int> colors;  // 1 or 2 per vertex of the triangulation
  auto operator<=>(const Coloring&) const = default;
};

inline int root_vertex(const RootedMap& t) { return vertices(t).index[t.root]; }

inline std::vector<int> monochromatic_edges(const RootedMap& t, const Coloring& c) {
  const auto v = vertices(t);
  if (c.colors.size() != v.size()) throw UsageError("coloring: wrong number of colors");
  std::vector<int> mono;
  for (int e = 0; e < t.num_edges(); ++e) {
    if (c.colors[v.index[2 * e]] == c.colors[v.index[2 * e + 1]]) mono.push_back(e);
  }
  return mono;
}

/// The duals of the monochromatic edges, as a matching of dual(t). Requires
/// exactly n monochromatic edges for 2n triangular faces.
inline Matching matching_from_coloring(const RootedMap& t, const Coloring& c) {
  const auto f = faces(t);
  for (const auto& face : f.cycles) {
    if (face.size() != 3) throw UsageError("matching_from_coloring: not a triangulation");
  }
  for (int x : c.colors) {
    if (x != 1 && x != 2) throw UsageError("matching_from_coloring: colors must be 1 or 2");
  }
  if (c.colors.at(root_vertex(t)) != 1) throw UsageError("matching_from_coloring: root vertex must have color 1");
  const std::size_t n = f.size() / 2;
  std::vector<int> mono = monochromatic_edges(t, c);
  if (mono.size() != n) {
    throw DomainError("matching_from_coloring: " + std::to_string(mono.size()) + " monochromatic edges, expected " +
                      std::to_string(n));
  }
  return Matching{std::move(mono)};
}

/// Contract the matching's dual edges, 2-color the component graph (which is
/// bipartite) and give the root's component color 1.
inline Coloring coloring_from_matching(const RootedMap& m, const Matching& a) {
  if (!is_perfect_matching(m, a)) throw UsageError("coloring_from_matching: not a perfect matching");
  const RootedMap t = dual(m);
  const auto v = vertices(t);
  const int nv = static_cast<int>(v.size());
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e : a.edges) parent[find(v.index[2 * e])] = find(v.index[2 * e + 1]);

  std::vector<std::vector<int>> adj(nv);
  for (int e = 0; e < t.num_edges(); ++e) {
    if (a.contains(e)) continue;
    const int x = find(v.index[2 * e]), y = find(v.index[2 * e + 1]);
    if (x == y) throw InternalError("coloring_from_matching: component graph has a loop");
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<int> comp_color(nv, 0);
  const int root = find(root_vertex(t));
  comp_color[root] = 1;
  std::vector<int> queue{root};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (int y : adj[x]) {
      if (comp_color[y] == 0) {
        comp_color[y] = 3 - comp_color[x];
        queue.push_back(y);
      } else if (comp_color[y] == comp_color[x]) {
        throw InternalError("coloring_from_matching: component graph is not bipartite");
      }
    }
  }
  Coloring c;
  c.colors.resize(nv);
  for (int x = 0; x < nv; ++x) {
    c.colors[x] = comp_color[find(x)];
    if (c.colors[x] == 0) throw InternalError("coloring_from_matching: dual is disconnected");
  }
  return c;
}

/// Calls visit(coloring, monochromatic count) for each coloring with the
/// root vertex fixed to color 1.
template <typename Visit>
void for_each_rooted_coloring(const RootedMap& t, Visit&& visit) {
  const auto v = vertices(t);
  const int nv = static_cast<int>(v.size());
  if (nv > 30) throw ResourceError("colorings: too many vertices");
  const int r = v.index[t.root];
  std::vector<int> others;
  for (int x = 0; x < nv; ++x) {
    if (x != r) others.push_back(x);
  }
  Coloring c{std::vector<int>(nv, 1)};
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << others.size()); ++mask) {
    for (std::size_t i = 0; i < others.size(); ++i) c.colors[others[i]] = (mask >> i & 1) ? 2 : 1;
    int mono = 0;
    for (int e = 0; e < t.num_edges(); ++e) mono += c.colors[v.index[2 * e]] == c.colors[v.index[2 * e + 1]];
    visit(c, mono);
  }
}

/// Number of root-fixed colorings of t with exactly half as many
/// monochromatic edges as faces.
inline long count_minimal_colorings(const RootedMap& t) {
  const int n = static_cast<int>(faces(t).size()) / 2;
  long count = 0;
  for_each_rooted_coloring(t, [&](const Coloring&, int mono) { count += mono == n; });
  return count;
}

/// Sum over rooted triangulations with 2n faces (duals of cubic maps of size n).
inline long ising_census(int n, unsigned threads = 1) {
  if (n < 1 || n > 3) throw UsageError("ising_census: n must be in [1, 3]");
  return reduce_rooted_maps<long>(cubic_family(n), threads,
                                  [](const RootedMap& m) { return count_minimal_colorings(dual(m)); });
}

inline nlohmann::json to_json(const Coloring& c) { return c.colors; }

}  // namespace cubicpm
