#pragma once

// The two 2^{n-1} : 1 correspondences:
//  (A) cubic maps with a perfect matching through the root edge <-> 4-regular
//      maps with one split choice per non-root vertex (contract / split);
//  (B) bridgeless cubic maps with such a matching <-> bridgeless maps with a
//      set of flipped red edges (truncate / flip / normalize and recover).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cubicpm/errors.hpp"
#include "cubicpm/map_oracle.hpp"
#include "cubicpm/rooted_map.hpp"

namespace cubicpm {

/// One bit per non-root vertex of a 4-regular map, in canonical vertex order.
/// For a vertex with rotation (w0 w1 w2 w3) listed from its least dart,
/// bit 0 splits it as {w0, w1} | {w2, w3} and bit 1 as {w1, w2} | {w3, w0}.
struct SplitChoice {
  std::vector<int> bits;
  auto operator<=>(const SplitChoice&) const = default;
};

struct ContractResult {
  RootedMap map;  // canonical 4-regular map
  SplitChoice choice;
};

namespace detail {

inline void require_root_in_matching(const MatchedMap& mm, const char* who) {
  validate(mm.map);
  if (!is_regular(mm.map, 3)) throw UsageError(std::string(who) + ": map is not cubic");
  if (!is_perfect_matching(mm.map, mm.matching)) throw UsageError(std::string(who) + ": not a perfect matching");
  if (!mm.matching.contains(edge_of(mm.map.root))) {
    throw UsageError(std::string(who) + ": root edge is not in the matching");
  }
}

}  // namespace detail

/// Contracts every matching edge, keeping the embedding. The result is rooted
/// at sigma(r), the dart after the root r in its rotation; the split bits are
/// read off the matching edges of the non-root vertices.
inline ContractResult contract_with_choice(const MatchedMap& mm) {
  detail::require_root_in_matching(mm, "contract_matching");
  const RootedMap& m = mm.map;
  const auto& s = m.sigma;

  std::vector<int> new_edge(m.num_edges(), -1);
  int kept = 0;
  for (int e = 0; e < m.num_edges(); ++e) {
    if (!mm.matching.contains(e)) new_edge[e] = kept++;
  }
  auto lbl = [&](int d) { return 2 * new_edge[edge_of(d)] + (d & 1); };

  RootedMap f;
  f.sigma.assign(2 * kept, -1);
  for (int d = 0; d < m.num_darts(); ++d) {
    if (new_edge[edge_of(d)] < 0) continue;
    int t = s[d];
    if (new_edge[edge_of(t)] < 0) t = s[alpha(t)];
    f.sigma[lbl(d)] = lbl(t);
  }
  f.root = lbl(s[m.root]);

  const Canonical c = canonicalize(f);
  const auto v = vertices(c.map);
  ContractResult out{c.map, {}};
  out.choice.bits.assign(v.size() - 1, 0);
  for (int e : mm.matching.edges) {
    const int x = 2 * e;
    const int p = c.relabel[lbl(s[x])], q = c.relabel[lbl(s[s[x]])];
    const int vid = v.index[p];
    if (vid == 0) continue;  // root vertex: split is forced
    const auto& w = v.cycles[vid];
    auto is_pair = [&](int i, int j) { return (p == w[i] && q == w[j]) || (p == w[j] && q == w[i]); };
    if (is_pair(0, 1) || is_pair(2, 3)) {
      out.choice.bits[vid - 1] = 0;
    } else if (is_pair(1, 2) || is_pair(3, 0)) {
      out.choice.bits[vid - 1] = 1;
    } else {
      throw InternalError("contract_matching: matching edge splits a vertex across its rotation");
    }
  }
  return out;
}

inline RootedMap contract_matching(const MatchedMap& mm) { return contract_with_choice(mm).map; }

/// Inverse of contract_with_choice. The root vertex (w0 w1 w2 w3) is split as
/// {w0, w1} | {w2, w3} and the new root is the split dart x with sigma(x) = w0.
inline MatchedMap split_expand(const RootedMap& f_in, const SplitChoice& choice) {
  validate(f_in);
  if (!is_regular(f_in, 4)) throw UsageError("split_expand: map is not 4-regular");
  const RootedMap f = canonical_form(f_in);
  const auto v = vertices(f);
  const int nv = static_cast<int>(v.size());
  if (static_cast<int>(choice.bits.size()) != nv - 1) throw UsageError("split_expand: need one bit per non-root vertex");
  const int base = f.num_darts();

  MatchedMap mm;
  mm.map.sigma.assign(base + 2 * nv, -1);
  auto& s = mm.map.sigma;
  for (int vid = 0; vid < nv; ++vid) {
    const auto& w = v.cycles[vid];
    const int x = base + 2 * vid, y = x + 1;
    const int bit = vid == 0 ? 0 : choice.bits[vid - 1];
    if (bit != 0 && bit != 1) throw UsageError("split_expand: bits must be 0 or 1");
    const int o = bit;  // rotation offset
    s[x] = w[o];
    s[w[o]] = w[(o + 1) % 4];
    s[w[(o + 1) % 4]] = x;
    s[y] = w[(o + 2) % 4];
    s[w[(o + 2) % 4]] = w[(o + 3) % 4];
    s[w[(o + 3) % 4]] = y;
    mm.matching.edges.push_back(edge_of(x));
  }
  mm.map.root = base;
  return canonicalize(mm);
}

/// Replaces each vertex of degree k by a k-cycle. Red darts keep their ids
/// 0 .. 2n-1; the black edge leaving the corner of dart d toward sigma(d) has
/// darts 2n + 2d (at d's corner) and 2n + 2d + 1 (at sigma(d)'s corner).
inline MatchedMap truncate_map(const RootedMap& b) {
  validate(b);
  if (has_bridge(b)) throw UsageError("truncate_map: map has a bridge");
  const int n2 = b.num_darts();
  std::vector<int> pre(n2);
  for (int d = 0; d < n2; ++d) pre[b.sigma[d]] = d;

  for (int orientation = 0; orientation < 2; ++orientation) {
    MatchedMap mm;
    mm.map.sigma.assign(3 * n2, -1);
    auto& s = mm.map.sigma;
    for (int d = 0; d < n2; ++d) {
      const int out = n2 + 2 * d, in = n2 + 2 * pre[d] + 1;
      const int p = orientation == 0 ? out : in, q = orientation == 0 ? in : out;
      s[d] = p;
      s[p] = q;
      s[q] = d;
    }
    mm.map.root = b.root;
    if (euler_characteristic(mm.map) != 2) continue;
    mm.matching.edges.resize(b.num_edges());
    std::iota(mm.matching.edges.begin(), mm.matching.edges.end(), 0);
    return mm;
  }
  throw InternalError("truncate_map: neither corner orientation is planar");
}

namespace detail {

inline bool removal_disconnects(const RootedMap& m, int e1, int e2) {
  const auto v = vertices(m);
  const int nv = static_cast<int>(v.size());
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = nv;
  for (int e = 0; e < m.num_edges(); ++e) {
    if (e == e1 || e == e2) continue;
    const int a = find(v.index[2 * e]), b = find(v.index[2 * e + 1]);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps > 1;
}

}  // namespace detail

/// Half-edges around red edge e: x = end of dart 2e with rotation (2e a b),
/// y = end of dart 2e+1 with rotation (2e+1 c d).
struct FlipCorners {
  int rx, a, b, ry, c, d;
};

inline FlipCorners flip_corners(const RootedMap& m, int e) {
  const auto& s = m.sigma;
  FlipCorners k{2 * e, 0, 0, 2 * e + 1, 0, 0};
  k.a = s[k.rx];
  k.b = s[k.a];
  k.c = s[k.ry];
  k.d = s[k.c];
  if (s[k.b] != k.rx || s[k.d] != k.ry) throw UsageError("flip_edge: endpoints are not cubic");
  return k;
}

/// True when half-edges h1, h2 form one edge or removing their two edges
/// disconnects the map.
inline bool pair_forms_edge_or_disconnects(const RootedMap& m, int h1, int h2) {
  return alpha(h1) == h2 || detail::removal_disconnects(m, edge_of(h1), edge_of(h2));
}

inline bool flip_is_exceptional(const MatchedMap& mm, int e) {
  const FlipCorners k = flip_corners(mm.map, e);
  return pair_forms_edge_or_disconnects(mm.map, k.b, k.c);
}

/// The red-edge flip. Normally b is paired with c and a with d around the red
/// edge; when {b, c} is an edge or a 2-edge cut the edge is redrawn in the
/// corners instead, giving the cyclic order (b, a, d, c). Dart and edge ids
/// are preserved. Only defined on bridgeless maps.
inline MatchedMap flip_edge(const MatchedMap& mm, int e) {
  if (e < 0 || e >= mm.map.num_edges() || !mm.matching.contains(e)) throw UsageError("flip_edge: edge is not red");
  if (e == edge_of(mm.map.root)) throw UsageError("flip_edge: the root edge cannot be flipped");
  if (has_bridge(mm.map)) throw UsageError("flip_edge: map has a bridge");
  const FlipCorners k = flip_corners(mm.map, e);
  MatchedMap out = mm;
  auto& s = out.map.sigma;
  if (pair_forms_edge_or_disconnects(mm.map, k.b, k.c)) {
    s[k.rx] = k.b, s[k.b] = k.a, s[k.a] = k.rx;
    s[k.ry] = k.d, s[k.d] = k.c, s[k.c] = k.ry;
  } else {
    s[k.rx] = k.b, s[k.b] = k.c, s[k.c] = k.rx;
    s[k.ry] = k.d, s[k.d] = k.a, s[k.a] = k.ry;
  }
  return out;
}

/// Non-root red edges of mm, in increasing id order.
inline std::vector<int> flippable_edges(const MatchedMap& mm) {
  std::vector<int> out;
  for (int e : mm.matching.edges) {
    if (e != edge_of(mm.map.root)) out.push_back(e);
  }
  return out;
}

/// Flips the listed edges one after the other.
inline MatchedMap apply_flips(MatchedMap mm, const std::vector<int>& edges) {
  for (int e : edges) mm = flip_edge(mm, e);
  return mm;
}

struct BadEdgeReport {
  std::vector<int> depth;    // per red edge: number of black cycles containing it
  std::vector<int> worthy;   // bad red edges inside exactly one cycle and touching it
  int bad = 0;
};

/// Inside/outside is decided per black cycle C by grouping the faces that
/// stay connected when only the edges of C are forbidden: the side holding
/// the root edge is the outside.
inline BadEdgeReport bad_edges(const MatchedMap& mm) {
  const RootedMap& m = mm.map;
  const auto v = vertices(m);
  const auto f = faces(m);
  const int nv = static_cast<int>(v.size());
  const int nf = static_cast<int>(f.size());

  // Black cycles as components of the black edges.
  std::vector<int> cyc(nv);
  std::iota(cyc.begin(), cyc.end(), 0);
  auto find = [](std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  for (int e = 0; e < m.num_edges(); ++e) {
    if (!mm.matching.contains(e)) cyc[find(cyc, v.index[2 * e])] = find(cyc, v.index[2 * e + 1]);
  }
  std::vector<int> roots;
  for (int x = 0; x < nv; ++x) {
    if (find(cyc, x) == x) roots.push_back(x);
  }

  BadEdgeReport rep;
  rep.depth.assign(m.num_edges(), 0);
  std::vector<int> only_cycle(m.num_edges(), -1);
  for (int c : roots) {
    std::vector<int> side(nf);
    std::iota(side.begin(), side.end(), 0);
    for (int e = 0; e < m.num_edges(); ++e) {
      const bool on_c = !mm.matching.contains(e) && find(cyc, v.index[2 * e]) == c;
      if (!on_c) side[find(side, f.index[2 * e])] = find(side, f.index[2 * e + 1]);
    }
    const int outside = find(side, f.index[m.root]);
    for (int e : mm.matching.edges) {
      if (find(side, f.index[2 * e]) != outside) {
        ++rep.depth[e];
        only_cycle[e] = c;
      }
    }
  }
  for (int e : mm.matching.edges) {
    if (rep.depth[e] == 0) continue;
    ++rep.bad;
    const int c = only_cycle[e];
    if (rep.depth[e] == 1 && (find(cyc, v.index[2 * e]) == c || find(cyc, v.index[2 * e + 1]) == c)) {
      rep.worthy.push_back(e);
    }
  }
  return rep;
}

/// Contracts the black cycles of a good map; red darts become the darts of
/// the base map.
inline RootedMap recover_base(const MatchedMap& good) {
  const RootedMap& m = good.map;
  std::vector<int> new_edge(m.num_edges(), -1);
  int k = 0;
  for (int e : good.matching.edges) new_edge[e] = k++;
  auto lbl = [&](int d) { return 2 * new_edge[edge_of(d)] + (d & 1); };
  RootedMap b;
  b.sigma.assign(2 * k, -1);
  for (int e : good.matching.edges) {
    for (int d : {2 * e, 2 * e + 1}) {
      const int next = m.sigma[alpha(m.sigma[d])];
      if (new_edge[edge_of(next)] < 0) throw InternalError("recover_base: black cycle is not an empty face");
      b.sigma[lbl(d)] = lbl(next);
    }
  }
  b.root = lbl(m.root);
  validate(b);
  return canonical_form(b);
}

struct NormalizeResult {
  MatchedMap good;  // canonical
  RootedMap base;   // canonical
  int flips = 0;
};

/// Flips random bad worthy edges until none is bad, checking that every flip
/// lowers the number of bad edges, then recovers the base map.
inline NormalizeResult normalize_and_recover(const MatchedMap& input, std::uint64_t seed = 0) {
  detail::require_root_in_matching(input, "normalize_and_recover");
  if (has_bridge(input.map)) throw UsageError("normalize_and_recover: map has a bridge");
  std::mt19937_64 rng(seed);
  MatchedMap mm = input;
  const int red = static_cast<int>(mm.matching.edges.size());
  NormalizeResult out;
  for (BadEdgeReport rep = bad_edges(mm); rep.bad > 0;) {
    if (out.flips >= red * red) throw InternalError("normalize_and_recover: too many flips");
    if (rep.worthy.empty()) throw InternalError("normalize_and_recover: bad edges but none worthy");
    std::uniform_int_distribution<std::size_t> pick(0, rep.worthy.size() - 1);
    mm = flip_edge(mm, rep.worthy[pick(rng)]);
    ++out.flips;
    const BadEdgeReport next = bad_edges(mm);
    if (next.bad >= rep.bad) throw InternalError("normalize_and_recover: flip did not reduce bad edges");
    rep = next;
  }
  out.good = canonicalize(mm);
  out.base = recover_base(mm);
  return out;
}

}  // namespace cubicpm
