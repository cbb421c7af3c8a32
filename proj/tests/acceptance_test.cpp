// The twelve acceptance checks at their stated tolerances, one test each.
// Every test prints a single PASS/FAIL line.

#include <gtest/gtest.h>

#include <iostream>

#include "cubicpm/verify.hpp"

namespace cubicpm {
namespace {

VerifyContext& context() {
  static VerifyContext ctx([] {
    RunConfig cfg;
    cfg.order = 30;
    cfg.max_n = 4;
    cfg.threads = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
    return cfg;
  }());
  return ctx;
}

void run(int id) {
  const CheckResult r = run_check(id, context());
  std::cout << summary_line(r) << std::endl;
  for (const auto& n : r.notes) std::cout << "    " << n << std::endl;
  EXPECT_EQ(r.status, CheckStatus::Pass) << r.expected;
  EXPECT_EQ(r.skipped, 0);
}

TEST(Acceptance, C01_Table1Reproduction) { run(1); }
TEST(Acceptance, C02_ClosedFormulas) { run(2); }
TEST(Acceptance, C03_MinimalPolynomialResiduals) { run(3); }
TEST(Acceptance, C04_MapOracleCensus) { run(4); }
TEST(Acceptance, C05_IsingCorrespondence) { run(5); }
TEST(Acceptance, C06_ContractionFibers) { run(6); }
TEST(Acceptance, C07_FlipBijection) { run(7); }
TEST(Acceptance, C08_Table2Reproduction) { run(8); }
TEST(Acceptance, C09_GraphOracleCensus) { run(9); }
TEST(Acceptance, C10_Constants) { run(10); }
TEST(Acceptance, C11_GrowthFits) { run(11); }
TEST(Acceptance, C12_TriangulationSeries) { run(12); }

}  // namespace
}  // namespace cubicpm
