#pragma once

// Reference values, embedded at build time from data/golden.json.

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cubicpm/golden_data.hpp"
#include "cubicpm/series.hpp"

namespace cubicpm {

struct GoldenTable1Row {
  int vertices;
  Integer M, B, T;
};

struct GoldenTable2Row {
  int vertices;
  Integer G, C, A;
};

struct GoldenCensusRow {
  int n;
  long all, bridgeless, three_connected;
};

struct Golden {
  std::vector<GoldenTable1Row> table1;
  std::vector<GoldenTable2Row> table2;
  std::map<std::string, std::string> constants;  // decimal strings as quoted
  std::vector<GoldenCensusRow> map_census;
  std::vector<long> rooted_planar;  // R_1, R_2, ...
  std::vector<long> loopless;       // L_1, L_2, ...
};

inline Golden parse_golden(const nlohmann::json& j) {
  Golden g;
  for (const auto& r : j.at("table1").at("rows")) {
    g.table1.push_back({r[0].get<int>(), Integer(r[1].get<std::string>()), Integer(r[2].get<std::string>()),
                        Integer(r[3].get<std::string>())});
  }
  for (const auto& r : j.at("table2").at("rows")) {
    g.table2.push_back({r[0].get<int>(), Integer(r[1].get<std::string>()), Integer(r[2].get<std::string>()),
                        Integer(r[3].get<std::string>())});
  }
  for (const auto& [k, v] : j.at("constants").items()) g.constants[k] = v.get<std::string>();
  for (const auto& r : j.at("map_oracle_census").at("rows")) {
    g.map_census.push_back({r[0].get<int>(), r[1].get<long>(), r[2].get<long>(), r[3].get<long>()});
  }
  g.rooted_planar = j.at("rooted_planar_R").get<std::vector<long>>();
  g.loopless = j.at("loopless_L").get<std::vector<long>>();
  return g;
}

inline const Golden& golden() {
  static const Golden g = parse_golden(nlohmann::json::parse(golden_data::kGoldenJson));
  return g;
}

}  // namespace cubicpm
