#pragma once

// Brute-force ground truth for labeled cubic planar graphs: orderly
// generation of labeled simple cubic graphs, a planarity filter, and
// perfect-matching counts.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "cubicpm/errors.hpp"
#include "cubicpm/series.hpp"

namespace cubicpm {

/// Simple graph on vertices 0 .. n-1 (printed 1 .. n), adjacency as bitmasks.
struct LabeledGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;

  explicit LabeledGraph(int vertices = 0) : n(vertices), adj(static_cast<std::size_t>(vertices), 0) {
    if (vertices < 0 || vertices > 32) throw UsageError("graph: vertex count must be in [0, 32]");
  }

  static LabeledGraph from_edges(int vertices, const std::vector<std::pair<int, int>>& edges) {
    LabeledGraph g(vertices);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  void add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw UsageError("graph: bad edge");
    if (has_edge(u, v)) throw UsageError("graph: repeated edge");
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  bool has_edge(int u, int v) const { return adj[u] >> v & 1u; }
  int degree(int v) const { return std::popcount(adj[v]); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (has_edge(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool operator==(const LabeledGraph&) const = default;
};

/// "n m" then one "u v" line per edge, 1-based.
inline std::string to_edge_list(const LabeledGraph& g) {
  std::ostringstream os;
  const auto e = g.edges();
  os << g.n << ' ' << e.size() << '\n';
  for (auto [u, v] : e) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

inline LabeledGraph complete_graph(int n) {
  LabeledGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline LabeledGraph complete_bipartite(int a, int b) {
  LabeledGraph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

inline LabeledGraph prism() {
  return LabeledGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

/// Boyer-Myrvold planarity test.
inline bool is_planar(const LabeledGraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                      boost::property<boost::vertex_index_t, int>>;
  const auto e = g.edges();
  if (g.n >= 3 && static_cast<int>(e.size()) > 3 * g.n - 6) return false;
  Graph bg(static_cast<std::size_t>(g.n));
  for (auto [u, v] : e) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

/// Independent check: search every rotation system and count faces; the graph
/// is planar iff some system satisfies Euler's formula on every component.
inline bool is_planar_by_rotations(const LabeledGraph& g, double budget = 5e6) {
  const auto e = g.edges();
  const int m = static_cast<int>(e.size());
  std::vector<std::vector<int>> darts(g.n);
  for (int i = 0; i < m; ++i) {
    darts[e[i].first].push_back(2 * i);
    darts[e[i].second].push_back(2 * i + 1);
  }
  double systems = 1;
  for (const auto& d : darts) {
    for (std::size_t k = 2; k < d.size(); ++k) systems *= static_cast<double>(k);
  }
  if (systems > budget) throw ResourceError("is_planar_by_rotations: too many rotation systems");

  // Components with at least one edge, and non-isolated vertices.
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : e) parent[find(u)] = find(v);
  int comps = 0, busy = 0;
  for (int v = 0; v < g.n; ++v) {
    if (darts[v].empty()) continue;
    ++busy;
    comps += find(v) == v;
  }
  if (m == 0) return true;

  // Each vertex cycles through the orders of darts[v][1..] after darts[v][0].
  std::vector<std::vector<int>> order = darts;
  for (auto& o : order) std::sort(o.begin() + (o.empty() ? 0 : 1), o.end());
  std::vector<int> sigma(2 * m);
  for (;;) {
    for (const auto& o : order) {
      for (std::size_t i = 0; i < o.size(); ++i) sigma[o[i]] = o[(i + 1) % o.size()];
    }
    std::vector<char> seen(2 * m, 0);
    int f = 0;
    for (int d = 0; d < 2 * m; ++d) {
      if (seen[d]) continue;
      ++f;
      for (int x = d; !seen[x]; x = sigma[x ^ 1]) seen[x] = 1;
    }
    if (busy - m + f == 2 * comps) return true;
    int v = 0;
    for (; v < g.n; ++v) {
      auto& o = order[v];
      if (o.size() > 2 && std::next_permutation(o.begin() + 1, o.end())) break;
      if (o.size() > 2) std::sort(o.begin() + 1, o.end());
    }
    if (v == g.n) return false;
  }
}

/// Exhaustive count of perfect matchings.
inline long count_perfect_matchings_graph(const LabeledGraph& g) {
  if (g.n % 2 != 0) throw UsageError("count_perfect_matchings_graph: odd vertex count");
  const std::uint32_t all = g.n == 32 ? ~0u : ((1u << g.n) - 1);
  auto rec = [&](auto&& self, std::uint32_t left) -> long {
    if (left == 0) return 1;
    const int v = std::countr_zero(left);
    long total = 0;
    for (std::uint32_t nb = g.adj[v] & left; nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      total += self(self, left & ~(1u << v) & ~(1u << w));
    }
    return total;
  };
  return rec(rec, all);
}

namespace detail {

inline int graph_components(const LabeledGraph& g, int skip_u = -1, int skip_v = -1) {
  std::vector<char> seen(g.n, 0);
  int comps = 0;
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (std::uint32_t nb = g.adj[x]; nb; nb &= nb - 1) {
        const int y = std::countr_zero(nb);
        if ((x == skip_u && y == skip_v) || (x == skip_v && y == skip_u)) continue;
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return comps;
}

}  // namespace detail

inline bool is_connected(const LabeledGraph& g) { return g.n > 0 && detail::graph_components(g) == 1; }

inline bool has_bridge(const LabeledGraph& g) {
  const int base = detail::graph_components(g);
  for (auto [u, v] : g.edges()) {
    if (detail::graph_components(g, u, v) > base) return true;
  }
  return false;
}

namespace detail {

// Vertex i takes 3 - deg(i) new neighbours among j > i with spare degree;
// each labeled cubic graph has exactly one such construction sequence.
template <typename Visit>
void extend_cubic(LabeledGraph& g, int i, Visit& visit) {
  while (i < g.n && g.degree(i) == 3) ++i;
  if (i == g.n) {
    visit(static_cast<const LabeledGraph&>(g));
    return;
  }
  const int need = 3 - g.degree(i);
  std::vector<int> cand;
  for (int j = i + 1; j < g.n; ++j) {
    if (g.degree(j) < 3) cand.push_back(j);
  }
  if (static_cast<int>(cand.size()) < need) return;
  std::vector<int> pick(need);
  auto choose = [&](auto&& self, int from, int k) -> void {
    if (k == need) {
      for (int j : pick) g.add_edge(i, j);
      extend_cubic(g, i + 1, visit);
      for (int j : pick) {
        g.adj[i] &= ~(1u << j);
        g.adj[j] &= ~(1u << i);
      }
      return;
    }
    for (int t = from; t + (need - k) <= static_cast<int>(cand.size()); ++t) {
      pick[k] = cand[t];
      self(self, t + 1, k + 1);
    }
  };
  choose(choose, 0, 0);
}

}  // namespace detail

inline void check_graph_size(int n, bool allow_large) {
  if (n % 2 != 0 || n < 4) throw UsageError("cubic graphs: n must be even and >= 4");
  if (n > 10 || (n == 10 && !allow_large)) throw ResourceError("cubic graphs: n = " + std::to_string(n) + " exceeds the cap");
}

/// Every labeled simple cubic graph on n vertices (planar or not), once.
template <typename Visit>
void for_each_labeled_cubic(int n, Visit&& visit) {
  LabeledGraph g(n);
  detail::extend_cubic(g, 0, visit);
}

template <typename Visit>
void for_each_labeled_cubic_planar(int n, Visit&& visit, bool allow_large = false) {
  check_graph_size(n, allow_large);
  for_each_labeled_cubic(n, [&](const LabeledGraph& g) {
    if (is_planar(g)) visit(g);
  });
}

inline std::vector<LabeledGraph> enumerate_labeled_cubic_planar(int n, bool allow_large = false) {
  std::vector<LabeledGraph> out;
  for_each_labeled_cubic_planar(n, [&](const LabeledGraph& g) { out.push_back(g); }, allow_large);
  return out;
}

enum class GraphFilter { All, Connected, Bridgeless };

inline std::string_view to_string(GraphFilter f) {
  switch (f) {
    case GraphFilter::All: return "all";
    case GraphFilter::Connected: return "connected";
    case GraphFilter::Bridgeless: return "bridgeless";
  }
  return "?";
}

/// Matched counts for the three Table-2 columns; "bridgeless" graphs are
/// connected.
struct LabeledCensus {
  Integer all, connected, bridgeless;
  long graphs = 0;

  LabeledCensus& operator+=(const LabeledCensus& o) {
    all += o.all;
    connected += o.connected;
    bridgeless += o.bridgeless;
    graphs += o.graphs;
    return *this;
  }

  const Integer& operator[](GraphFilter f) const {
    switch (f) {
      case GraphFilter::All: return all;
      case GraphFilter::Connected: return connected;
      case GraphFilter::Bridgeless: return bridgeless;
    }
    return all;
  }
};

inline LabeledCensus census_of(const LabeledGraph& g) {
  LabeledCensus c;
  const long pm = count_perfect_matchings_graph(g);
  c.graphs = 1;
  c.all = pm;
  if (is_connected(g)) {
    c.connected = pm;
    if (!has_bridge(g)) c.bridgeless = pm;
  }
  return c;
}

/// Census of labeled cubic planar graphs on n vertices. Work is split by the
/// neighbourhood of vertex 0.
inline LabeledCensus labeled_census(int n, unsigned threads = 1, bool allow_large = false) {
  check_graph_size(n, allow_large);
  std::vector<std::vector<int>> firsts;
  for (int a = 1; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) firsts.push_back({a, b, c});
    }
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<LabeledCensus> partial(std::max(1u, threads));
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&](unsigned t) {
    try {
      auto visit = [&](const LabeledGraph& g) {
        if (is_planar(g)) partial[t] += census_of(g);
      };
      for (std::size_t i = cursor++; i < firsts.size(); i = cursor++) {
        LabeledGraph g(n);
        for (int j : firsts[i]) g.add_edge(0, j);
        detail::extend_cubic(g, 1, visit);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  LabeledCensus total;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace cubicpm
