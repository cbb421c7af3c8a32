#include <gtest/gtest.h>

#include "cubicpm/verify.hpp"

namespace cubicpm {
namespace {

RunConfig small(std::size_t order) {
  RunConfig cfg;
  cfg.order = order;
  cfg.max_n = 2;
  cfg.threads = 2;
  return cfg;
}

TEST(Golden, ParsesAllSections) {
  const Golden& g = golden();
  ASSERT_EQ(g.table1.size(), 10u);
  ASSERT_EQ(g.table2.size(), 9u);
  EXPECT_EQ(g.table1.back().vertices, 20);
  EXPECT_EQ(g.table1.back().T, Integer("22201410"));
  EXPECT_EQ(g.table2[2].G, Integer("70875"));
  EXPECT_EQ(g.constants.at("gamma"), "1.14196");
  EXPECT_EQ(g.map_census.size(), 4u);
  EXPECT_EQ(g.rooted_planar, (std::vector<long>{2, 9, 54}));
  EXPECT_EQ(g.loopless, (std::vector<long>{1, 3, 13}));
}

TEST(Verify, OrderBelowTenIsAUsageError) {
  EXPECT_THROW(VerifyContext(small(9)), UsageError);
  RunConfig cfg = small(30);
  cfg.threads = 0;
  EXPECT_THROW(VerifyContext{cfg}, UsageError);
}

TEST(Verify, OrderTenSkipsTheLaterTable2Rows) {
  VerifyContext ctx(small(10));
  const CheckResult t1 = run_check(1, ctx);
  EXPECT_EQ(t1.status, CheckStatus::Pass);
  EXPECT_EQ(t1.skipped, 0);
  const CheckResult t2 = run_check(8, ctx);
  EXPECT_EQ(t2.status, CheckStatus::Pass);
  EXPECT_EQ(t2.checked, 12);  // rows 4..10
  EXPECT_EQ(t2.skipped, 5);   // rows 12..20
}

TEST(Verify, MaxNCapsTheOracles) {
  VerifyContext ctx(small(10));
  const CheckResult maps = run_check(4, ctx);
  EXPECT_EQ(maps.status, CheckStatus::Pass);
  EXPECT_EQ(maps.skipped, 2);
  EXPECT_EQ(maps.got, "(6,3,0) (54,18,3)");
  const CheckResult graphs = run_check(9, ctx);
  EXPECT_EQ(graphs.status, CheckStatus::Pass);
  EXPECT_EQ(graphs.skipped, 2);  // n = 6, 8
}

TEST(Verify, VariantReadingReportsFirstDivergence) {
  RunConfig cfg = small(20);
  cfg.variant_h_substitution = true;
  VerifyContext ctx(cfg);
  const CheckResult r = run_check(8, ctx);
  EXPECT_EQ(r.status, CheckStatus::Fail);
  bool reported = false;
  for (const auto& n : r.notes) reported = reported || n.find("first differ at v=8 G") != std::string::npos;
  EXPECT_TRUE(reported);
}

TEST(Verify, DefaultReadingAlsoNamesTheDivergence) {
  VerifyContext ctx(small(20));
  const CheckResult r = run_check(8, ctx);
  EXPECT_EQ(r.status, CheckStatus::Pass);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.back().find("v=8 G: 70875 vs 60795"), std::string::npos);
}

TEST(Verify, ReportFormats) {
  VerifyReport rep;
  VerifyContext ctx(small(10));
  rep.results.push_back(run_check(3, ctx));
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(to_json(rep)["checks"][0]["status"], "PASS");
  EXPECT_NE(to_csv(rep).find("\"minimal polynomial residuals\",PASS"), std::string::npos);
  EXPECT_EQ(summary_line(rep.results[0]).rfind("[PASS] 3 minimal polynomial residuals: 3/3 agree", 0), 0u);
  rep.results[0].status = CheckStatus::Fail;
  EXPECT_FALSE(rep.ok());
  EXPECT_THROW(run_check(13, ctx), UsageError);
}

TEST(Tables, Table1AtOrderTen) {
  const auto rows = table1(10);
  ASSERT_EQ(rows.size(), 10u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].vertices, golden().table1[i].vertices);
    EXPECT_EQ(rows[i].M, golden().table1[i].M);
    EXPECT_EQ(rows[i].B, golden().table1[i].B);
    EXPECT_EQ(rows[i].T, golden().table1[i].T);
  }
}

}  // namespace
}  // namespace cubicpm
