#pragma once

// The two count tables, recomputed from the series pipelines.

#include <cstddef>
#include <vector>

#include "cubicpm/graph_series.hpp"
#include "cubicpm/map_series.hpp"

namespace cubicpm {

struct MapSeriesBundle {
  Series M;  // matched maps, from the quadratic
  Series B;  // matched bridgeless maps, from the bridgeless system
  Series T;  // matched 3-connected maps, T0 + T1
  MatchedMapSystem system;
};

inline MapSeriesBundle solve_map_series(std::size_t order) {
  if (order < 2) throw UsageError("solve_map_series: order must be >= 2");
  const auto t = matched_3connected_series(order);
  MapSeriesBundle b;
  b.M = matched_map_series(order);
  b.T = t.total();
  b.system = solve_matched_map_system(t.T0, t.T1, order);
  b.B = solve_matched_bridgeless_system(t.T0, t.T1, order).B;
  return b;
}

struct Table1Row {
  int vertices;
  Integer M, B, T;
};

inline Integer integral_coefficient(const Series& s, std::size_t n) {
  if (s[n].get_den() != 1) throw InternalError("non-integral count coefficient");
  return s[n].get_num();
}

/// Rows for 2, 4, ..., 2 * order vertices.
inline std::vector<Table1Row> table1(std::size_t order) {
  const MapSeriesBundle b = solve_map_series(order);
  std::vector<Table1Row> rows;
  for (std::size_t n = 1; n <= order; ++n) {
    rows.push_back({static_cast<int>(2 * n), integral_coefficient(b.M, n), integral_coefficient(b.B, n),
                    integral_coefficient(b.T, n)});
  }
  return rows;
}

struct Table2Row {
  int vertices;
  Integer G, C, A;
};

/// Rows for 4, 6, ..., max_vertices vertices (max_vertices even).
inline std::vector<Table2Row> table2(std::size_t max_vertices, HSubstitution h = HSubstitution::SquareOfSum) {
  std::vector<Table2Row> rows;
  for (const auto& r : labeled_counts_table(max_vertices, h)) {
    if (r.n < 4) continue;
    rows.push_back({static_cast<int>(r.n), r.all, r.connected, r.bridgeless});
  }
  return rows;
}

}  // namespace cubicpm
