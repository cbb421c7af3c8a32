// cubicpm: command-line front end for the counting workbench.
// Exit codes: 0 ok, 1 mismatch, 2 usage, 3 resource.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cubicpm/asymptotics.hpp"
#include "cubicpm/bijections.hpp"
#include "cubicpm/golden.hpp"
#include "cubicpm/graph_oracle.hpp"
#include "cubicpm/ising.hpp"
#include "cubicpm/map_oracle.hpp"
#include "cubicpm/tables.hpp"
#include "cubicpm/verify.hpp"

namespace fs = std::filesystem;
using namespace cubicpm;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

struct Options {
  RunConfig cfg;
  std::string dump_path;
  bool allow_large = false;
  std::string out_dir;
  std::vector<int> only;
  std::string which;
  std::string kind;
  std::string filter = "all";
  std::string poly;
  int n = 0;
};

// A table of strings rendered as text, CSV or JSON.
struct Grid {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string render(const std::string& format) const {
    std::ostringstream os;
    if (format == "csv") {
      for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
      os << "\n";
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << "\n";
      }
    } else if (format == "json") {
      nlohmann::json j = {{"columns", columns}, {"rows", rows}};
      os << j.dump(2) << "\n";
    } else {
      std::vector<std::size_t> width(columns.size());
      for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
      }
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << r[i];
        os << "\n";
      };
      line(columns);
      for (const auto& r : rows) line(r);
    }
    return os.str();
  }
};

std::string extension(const std::string& format) { return format == "text" ? "txt" : format; }

void write_file(const fs::path& p, const std::string& body) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot open " + p.string() + " for writing");
  out << body;
  if (!out) throw std::runtime_error("write failed: " + p.string());
}

int cmd_verify(const Options& o) {
  VerifyContext ctx(o.cfg);
  VerifyReport rep;
  std::vector<int> ids = o.only;
  if (ids.empty()) {
    for (int i = 1; i <= static_cast<int>(all_checks().size()); ++i) ids.push_back(i);
  }
  for (int id : ids) {
    rep.results.push_back(run_check(id, ctx));
    if (o.cfg.format == "text") std::cerr << summary_line(rep.results.back()) << "\n";
  }
  if (o.cfg.format == "json") {
    std::cout << to_json(rep).dump(2) << "\n";
  } else if (o.cfg.format == "csv") {
    std::cout << to_csv(rep);
  } else {
    std::cout << to_text(rep);
  }
  return rep.ok() ? kOk : kMismatch;
}

// Reproduction plus a line-per-difference diff against the golden rows.
int cmd_tables(const Options& o) {
  Grid grid;
  std::vector<std::string> diff;
  if (o.which == "table1") {
    if (o.cfg.order < 10) throw UsageError("tables: --order must be at least 10");
    grid.columns = {"vertices", "M", "B", "T"};
    const auto rows = table1(o.cfg.order);
    for (const auto& r : rows) grid.rows.push_back({std::to_string(r.vertices), r.M.get_str(), r.B.get_str(), r.T.get_str()});
    for (const auto& g : golden().table1) {
      const auto& r = rows[static_cast<std::size_t>(g.vertices / 2 - 1)];
      if (r.M != g.M || r.B != g.B || r.T != g.T) diff.push_back("v=" + std::to_string(g.vertices) + " differs");
    }
  } else if (o.which == "table2") {
    if (o.cfg.order < 10) throw UsageError("tables: --order must be at least 10");
    const std::size_t order = std::max<std::size_t>(20, o.cfg.order - o.cfg.order % 2);
    const auto h = o.cfg.variant_h_substitution ? HSubstitution::SumOfSquare : HSubstitution::SquareOfSum;
    const auto rows = table2(order, h);
    grid.columns = {"vertices", "G", "C", "A"};
    for (const auto& r : rows) grid.rows.push_back({std::to_string(r.vertices), r.G.get_str(), r.C.get_str(), r.A.get_str()});
    for (const auto& g : golden().table2) {
      const auto& r = rows[static_cast<std::size_t>(g.vertices / 2 - 2)];
      auto col = [&](const char* name, const Integer& want, const Integer& got) {
        if (want != got) diff.push_back("v=" + std::to_string(g.vertices) + " " + name + ": golden " + want.get_str() + " got " + got.get_str());
      };
      col("G", g.G, r.G);
      col("C", g.C, r.C);
      col("A", g.A, r.A);
    }
  } else if (o.which == "constants") {
    const auto all = constants_report();
    grid.columns = {"name", "value", "radius", "quoted"};
    for (const auto& c : all) {
      std::ostringstream v, rad;
      v << std::setprecision(12) << c.ball.value();
      rad << std::setprecision(3) << c.ball.radius();
      const auto q = golden().constants.find(c.name);
      grid.rows.push_back({c.name, v.str(), rad.str(), q == golden().constants.end() ? "" : q->second});
      if (q == golden().constants.end()) continue;
      const bool bound = c.name.find("_over_") != std::string::npos;
      // alpha is an input ball around its quoted value, so only containment is meaningful.
      const Rational quoted = parse_decimal(q->second);
      const bool ok = bound                ? c.ball.lo() >= quoted
                      : c.name == "alpha" ? c.ball.lo() <= quoted && quoted <= c.ball.hi()
                                          : c.ball.within(std::stod(q->second), 1e-5);
      if (!ok) diff.push_back(c.name + " " + v.str() + " vs quoted " + q->second);
    }
    if (o.cfg.format == "json") {
      // The constants report has its own JSON shape.
      std::cout << to_json(all).dump(2) << "\n";
      grid.rows.clear();
    }
  } else {
    throw UsageError("tables: expected table1, table2 or constants");
  }

  const std::string body = grid.rows.empty() ? "" : grid.render(o.cfg.format);
  std::ostringstream d;
  for (const auto& line : diff) d << line << "\n";
  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    write_file(fs::path(o.out_dir) / (o.which + "." + extension(o.cfg.format)), body);
    write_file(fs::path(o.out_dir) / (o.which + ".diff.txt"), d.str());
  } else {
    std::cout << body;
  }
  std::cerr << o.which << ": " << (diff.empty() ? "matches golden values" : std::to_string(diff.size()) + " differences") << "\n";
  std::cerr << d.str();
  return diff.empty() ? kOk : kMismatch;
}

int cmd_series(const Options& o) {
  const std::size_t order = o.cfg.order;
  Series s;
  bool egf = false;
  if (o.kind == "M") {
    s = matched_map_series(order);
  } else if (o.kind == "B" || o.kind == "T") {
    const auto b = solve_map_series(order);
    s = o.kind == "B" ? b.B : b.T;
  } else if (o.kind == "T1") {
    s = matched_3connected_series(order).T1;
  } else if (o.kind == "theta") {
    s = tutte_triangulation_series(order).Theta;
  } else if (o.kind == "G" || o.kind == "C" || o.kind == "A") {
    const auto h = o.cfg.variant_h_substitution ? HSubstitution::SumOfSquare : HSubstitution::SquareOfSum;
    const auto b = solve_graph_series(order + order % 2, h);
    s = o.kind == "G" ? b.all : o.kind == "C" ? b.general.graphs : b.bridgeless.graphs;
    egf = true;
  } else {
    throw UsageError("series: expected one of M, B, T, T1, theta, G, C, A");
  }
  Grid grid;
  grid.columns = {"n", "coefficient"};
  if (egf) grid.columns.push_back("labeled");
  for (std::size_t n = 0; n <= std::min(order, s.order()); ++n) {
    std::vector<std::string> row{std::to_string(n), s[n].get_str()};
    if (egf) row.push_back(labeled_count(s, n).get_str());
    grid.rows.push_back(row);
  }
  std::cout << grid.render(o.cfg.format);
  return kOk;
}

int cmd_counts(const Options& o) {
  const CountKind kind = count_kind_from_string(o.kind);
  Grid grid;
  grid.columns = {"n", std::string(to_string(kind))};
  for (unsigned long n = 1; n <= o.cfg.order; ++n) grid.rows.push_back({std::to_string(n), closed_form_count(kind, n).get_str()});
  std::cout << grid.render(o.cfg.format);
  return kOk;
}

int cmd_enumerate(const Options& o) {
  const int n = o.n > 0 ? o.n : o.cfg.max_n;
  std::ofstream dump;
  if (!o.dump_path.empty()) {
    dump.open(o.dump_path);
    if (!dump) throw std::runtime_error("cannot open " + o.dump_path);
  }
  Grid grid;
  if (o.which == "maps") {
    const MapFilter filter = map_filter_from_string(o.filter);
    grid.columns = {"n", "filter", "rooted_maps", "matched_maps"};
    long maps = 0;
    Integer matched = 0;
    for (const auto& m : enumerate_rooted_cubic_maps(n, o.allow_large)) {
      if (!passes(classify_connectivity(m), filter)) continue;
      ++maps;
      const auto pms = list_perfect_matchings(m);
      matched += static_cast<unsigned long>(pms.size());
      if (dump) {
        for (const auto& a : pms) dump << to_json(MatchedMap{m, a}).dump() << "\n";
      }
    }
    grid.rows.push_back({std::to_string(n), std::string(to_string(filter)), std::to_string(maps), matched.get_str()});
  } else if (o.which == "graphs") {
    // For graphs n counts vertices.
    const int v = o.n > 0 ? o.n : 2 * o.cfg.max_n;
    check_graph_size(v, o.allow_large);
    const LabeledCensus c = labeled_census(v, o.cfg.threads, o.allow_large);
    grid.columns = {"n", "graphs", "G", "C", "A"};
    grid.rows.push_back({std::to_string(v), std::to_string(c.graphs), c.all.get_str(), c.connected.get_str(), c.bridgeless.get_str()});
    if (dump) {
      for_each_labeled_cubic_planar(v, [&](const LabeledGraph& g) { dump << to_edge_list(g) << "\n"; }, o.allow_large);
    }
  } else {
    throw UsageError("enumerate: expected maps or graphs");
  }
  std::cout << grid.render(o.cfg.format);
  return kOk;
}

int cmd_ising(const Options& o) {
  const int n = o.n > 0 ? o.n : std::min(3, o.cfg.max_n);
  const long pairs = ising_census(n, o.cfg.threads);
  const Integer expected = closed_form_count(CountKind::MatchedCubic, static_cast<unsigned long>(n));
  if (!o.dump_path.empty()) {
    std::ofstream dump(o.dump_path);
    if (!dump) throw std::runtime_error("cannot open " + o.dump_path);
    for (const auto& m : enumerate_rooted_cubic_maps(n)) {
      for (const auto& a : list_perfect_matchings(m)) {
        nlohmann::json j = to_json(MatchedMap{m, a});
        j["coloring"] = to_json(coloring_from_matching(m, a));
        dump << j.dump() << "\n";
      }
    }
  }
  Grid grid;
  grid.columns = {"n", "minimal_colorings", "matched_maps"};
  grid.rows.push_back({std::to_string(n), std::to_string(pairs), expected.get_str()});
  std::cout << grid.render(o.cfg.format);
  return Integer(pairs) == expected ? kOk : kMismatch;
}

int cmd_bijection(const Options& o) {
  const int n = o.n > 0 ? o.n : std::min(3, o.cfg.max_n);
  std::map<RootedMap, long> fibers;
  long sources = 0;
  Integer expected_total;
  if (o.which == "contract") {
    for (const auto& m : enumerate_rooted_cubic_maps(n)) {
      for (const auto& a : list_perfect_matchings(m)) {
        if (!a.contains(edge_of(m.root))) continue;
        ++sources;
        ++fibers[contract_matching({m, a})];
      }
    }
    expected_total = closed_form_count(CountKind::RootedPlanar, n);
  } else if (o.which == "normalize") {
    for (const auto& m : enumerate_rooted_cubic_maps(n)) {
      if (has_bridge(m)) continue;
      for (const auto& a : list_perfect_matchings(m)) {
        if (!a.contains(edge_of(m.root))) continue;
        ++sources;
        ++fibers[normalize_and_recover({m, a}, o.cfg.seed).base];
      }
    }
    expected_total = closed_form_count(CountKind::Loopless, n);
  } else {
    throw UsageError("bijection: expected contract or normalize");
  }
  std::map<long, long> sizes;
  for (const auto& [f, s] : fibers) ++sizes[s];
  Grid grid;
  grid.columns = {"n", "sources", "images", "expected_images", "fiber_size", "fibers"};
  for (const auto& [s, count] : sizes) {
    grid.rows.push_back({std::to_string(n), std::to_string(sources), std::to_string(fibers.size()),
                         expected_total.get_str(), std::to_string(s), std::to_string(count)});
  }
  std::cout << grid.render(o.cfg.format);
  const bool ok = sizes.size() == 1 && sizes.begin()->first == (1L << (n - 1)) &&
                  Integer(static_cast<unsigned long>(fibers.size())) == expected_total;
  return ok ? kOk : kMismatch;
}

int cmd_roots(const Options& o) {
  static const std::map<std::string, std::vector<long>> named{
      {"sigma", polynomials::sigma_factor()},
      {"rho", polynomials::rho_factor()},
      {"sigma_b", polynomials::sigma_bridgeless_factor()},
      {"rho_b", polynomials::rho_bridgeless_factor()},
      {"alpha_b", polynomials::alpha_bridgeless_poly()}};
  std::vector<long> coeffs;
  if (const auto it = named.find(o.poly); it != named.end()) {
    coeffs = it->second;
  } else {
    std::stringstream ss(o.poly);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        coeffs.push_back(std::stol(tok));
      } catch (const std::exception&) {
        throw UsageError("roots: expected a known name or comma-separated coefficients, lowest degree first");
      }
    }
  }
  const QPoly p = poly::from_ints(coeffs);
  const RealBall r = smallest_positive_root(p);
  std::ostringstream mid, rad;
  mid << std::setprecision(17) << r.value();
  rad << std::setprecision(3) << r.radius();
  Grid grid;
  grid.columns = {"polynomial", "root", "radius", "simple"};
  grid.rows.push_back({o.poly, mid.str(), rad.str(), root_is_simple(p, r) ? "yes" : "no"});
  std::cout << grid.render(o.cfg.format);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of perfect matchings in cubic planar maps and graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--order", o.cfg.order, "Truncation order of the series")->capture_default_str();
  app.add_option("--max-n", o.cfg.max_n, "Size cap for the exhaustive oracles")->capture_default_str();
  app.add_option("--threads", o.cfg.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", o.cfg.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--seed", o.cfg.seed, "Seed for randomized flip orders")->capture_default_str();
  app.add_flag("--variant-h-substitution", o.cfg.variant_h_substitution, "Use the (1 + D0^2) reading in the network system");
  app.add_option("--dump-maps", o.dump_path, "Write enumerated objects to PATH, one per line");
  app.add_flag("--allow-large", o.allow_large, "Lift the default size caps of the oracles");
  app.fallthrough();

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--only", o.only, "Run only these check ids")->check(CLI::Range(1, 12));

  auto* tables = app.add_subcommand("tables", "Reproduce a table and diff it against the golden values");
  tables->add_option("which", o.which, "table1, table2 or constants")->required();
  tables->add_option("--out-dir", o.out_dir, "Write the table and its diff into DIR");

  auto* series = app.add_subcommand("series", "Print series coefficients up to --order");
  series->add_option("kind", o.kind, "M, B, T, T1, theta, G, C or A")->required();

  auto* counts = app.add_subcommand("counts", "Closed-formula counts for n <= --order");
  counts->add_option("kind", o.kind,
                     "matched_cubic, cubic, matched_bridgeless, bridgeless, rooted_planar_R or loopless_L")
      ->required();

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive census of maps or graphs");
  enumerate->add_option("which", o.which, "maps or graphs")->required();
  enumerate->add_option("--n", o.n, "Size: half the vertices for maps, vertices for graphs");
  enumerate->add_option("--filter", o.filter, "all, bridgeless or three_connected (maps only)")->capture_default_str();

  auto* ising = app.add_subcommand("ising", "Matchings against minimal 2-colorings of the dual");
  ising->add_option("--n", o.n, "Half the number of vertices");

  auto* bijection = app.add_subcommand("bijection", "Fiber structure of the contraction or the flip normalization");
  bijection->add_option("which", o.which, "contract or normalize")->required();
  bijection->add_option("--n", o.n, "Half the number of vertices");

  auto* roots = app.add_subcommand("roots", "Certified smallest positive root of a polynomial");
  roots->add_option("poly", o.poly, "sigma, rho, sigma_b, rho_b, alpha_b, or coefficients c0,c1,...")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*tables) return cmd_tables(o);
    if (*series) return cmd_series(o);
    if (*counts) return cmd_counts(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*ising) return cmd_ising(o);
    if (*bijection) return cmd_bijection(o);
    if (*roots) return cmd_roots(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
