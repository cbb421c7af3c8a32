#include <gtest/gtest.h>

#include <map>
#include <set>

#include "cubicpm/bijections.hpp"
#include "cubicpm/map_series.hpp"
#include "test_maps.hpp"

namespace cubicpm {
namespace {

// (M, A) with the root edge in A, canonical, optionally bridgeless only.
std::set<MatchedMap> rooted_matched_maps(int n, bool bridgeless_only) {
  std::set<MatchedMap> out;
  for (const auto& m : enumerate_rooted_cubic_maps(n)) {
    if (bridgeless_only && has_bridge(m)) continue;
    for (const auto& a : list_perfect_matchings(m)) {
      if (a.contains(edge_of(m.root))) out.insert({m, a});
    }
  }
  return out;
}

std::vector<SplitChoice> all_choices(int bits) {
  std::vector<SplitChoice> out;
  for (int mask = 0; mask < (1 << bits); ++mask) {
    SplitChoice c;
    for (int i = 0; i < bits; ++i) c.bits.push_back(mask >> i & 1);
    out.push_back(c);
  }
  return out;
}

std::vector<RootedMap> bridgeless_maps(int edges) {
  return collect_rooted_maps(MapFamily{edges, 0}, [](const RootedMap& m) { return !has_bridge(m); });
}

TEST(Contract, RootOutsideMatchingIsRejected) {
  const RootedMap m = testing_maps::triple_edge();
  EXPECT_THROW(contract_matching({m, Matching{{1}}}), UsageError);
  EXPECT_NO_THROW(contract_matching({m, Matching{{0}}}));
}

TEST(Contract, TwoVertexMapsGiveTheTwoOneVertexMaps) {
  std::set<RootedMap> images;
  const auto sources = rooted_matched_maps(1, false);
  EXPECT_EQ(sources.size(), 2u);
  for (const auto& mm : sources) images.insert(contract_matching(mm));
  const auto four = enumerate_rooted_4regular_maps(1);
  EXPECT_EQ(images, std::set<RootedMap>(four.begin(), four.end()));
}

TEST(Split, RoundTripAndInjectivity) {
  for (int n = 1; n <= 3; ++n) {
    std::set<MatchedMap> outputs;
    for (const auto& f : enumerate_rooted_4regular_maps(n)) {
      for (const auto& c : all_choices(n - 1)) {
        const MatchedMap mm = split_expand(f, c);
        EXPECT_TRUE(is_regular(mm.map, 3));
        EXPECT_EQ(vertices(mm.map).size(), static_cast<std::size_t>(2 * n));
        EXPECT_TRUE(is_perfect_matching(mm.map, mm.matching));
        EXPECT_TRUE(mm.matching.contains(edge_of(mm.map.root)));
        const ContractResult back = contract_with_choice(mm);
        EXPECT_EQ(back.map, f);
        EXPECT_EQ(back.choice, c);
        EXPECT_TRUE(outputs.insert(mm).second);
      }
    }
    // Surjective onto the matched maps with the root edge matched.
    EXPECT_EQ(outputs, rooted_matched_maps(n, false)) << n;
  }
}

TEST(Contract, FibersHaveSizeTwoToTheNMinusOne) {
  const long rooted[] = {2, 9, 54};
  for (int n = 1; n <= 3; ++n) {
    std::map<RootedMap, int> fibers;
    const auto sources = rooted_matched_maps(n, false);
    for (const auto& mm : sources) ++fibers[contract_matching(mm)];
    EXPECT_EQ(static_cast<long>(fibers.size()), rooted[n - 1]);
    for (const auto& [f, size] : fibers) EXPECT_EQ(size, 1 << (n - 1));
    EXPECT_EQ(Integer(static_cast<unsigned long>(3 * sources.size())), closed_form_count(CountKind::MatchedCubic, n));
  }
}

TEST(Truncate, LoopBecomesTripleEdge) {
  const auto loop = bridgeless_maps(1);
  ASSERT_EQ(loop.size(), 1u);
  const MatchedMap mm = truncate_map(loop[0]);
  EXPECT_EQ(canonical_form(mm.map), canonical_form(testing_maps::triple_edge()));
  EXPECT_EQ(mm.matching.edges, std::vector<int>{0});
}

TEST(Truncate, RejectsBridges) {
  const auto maps = enumerate_rooted_maps(1);
  for (const auto& m : maps) {
    if (has_bridge(m)) {
      EXPECT_THROW(truncate_map(m), UsageError);
    }
  }
}

TEST(Truncate, OutputIsBridgelessCubicWithRedMatchingThroughRoot) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& b : bridgeless_maps(n)) {
      const MatchedMap mm = truncate_map(b);
      EXPECT_NO_THROW(validate(mm.map));
      EXPECT_TRUE(is_regular(mm.map, 3));
      EXPECT_FALSE(has_bridge(mm.map));
      EXPECT_TRUE(is_perfect_matching(mm.map, mm.matching));
      EXPECT_TRUE(mm.matching.contains(edge_of(mm.map.root)));
      EXPECT_EQ(bad_edges(mm).bad, 0);
      EXPECT_EQ(recover_base(mm), b);
    }
  }
}

TEST(Truncate, TwoEdgeMapsGiveSixMatchedMaps) {
  std::set<MatchedMap> out;
  for (const auto& b : bridgeless_maps(2)) {
    const MatchedMap t = truncate_map(b);
    out.insert(canonicalize(t));
    for (int e : flippable_edges(t)) out.insert(canonicalize(flip_edge(t, e)));
  }
  EXPECT_EQ(out.size(), 6u);
  EXPECT_EQ(out, rooted_matched_maps(2, true));
}

TEST(Flip, RootAndBlackEdgesAreRejected) {
  const MatchedMap t = truncate_map(bridgeless_maps(2)[0]);
  EXPECT_THROW(flip_edge(t, edge_of(t.map.root)), UsageError);
  EXPECT_THROW(flip_edge(t, 2), UsageError);
}

TEST(Flip, MapsWithBridgesAreOutsideTheDomain) {
  // On maps with a bridge the rule is not an involution (checked at 2n = 4), so it is refused.
  int refused = 0;
  for (const auto& mm : rooted_matched_maps(2, false)) {
    if (!has_bridge(mm.map)) continue;
    for (int e : flippable_edges(mm)) {
      EXPECT_THROW(flip_edge(mm, e), UsageError);
      ++refused;
    }
  }
  EXPECT_GT(refused, 0);
}

TEST(Flip, InvolutionCommutationAndTheSymmetricCut) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& mm : rooted_matched_maps(n, true)) {
      const auto red = flippable_edges(mm);
      for (int e : red) {
        const MatchedMap once = flip_edge(mm, e);
        EXPECT_NO_THROW(validate(once.map));
        EXPECT_FALSE(has_bridge(once.map));
        EXPECT_EQ(canonicalize(flip_edge(once, e)), mm);
        if (flip_is_exceptional(mm, e)) {
          const FlipCorners k = flip_corners(mm.map, e);
          EXPECT_TRUE(pair_forms_edge_or_disconnects(mm.map, k.a, k.d));
        }
      }
      for (std::size_t i = 0; i < red.size(); ++i) {
        for (std::size_t j = i + 1; j < red.size(); ++j) {
          EXPECT_EQ(canonicalize(apply_flips(mm, {red[i], red[j]})), canonicalize(apply_flips(mm, {red[j], red[i]})));
        }
      }
    }
  }
}

TEST(Normalize, FibersConfluenceAndRecovery) {
  const long loopless[] = {1, 3, 13};
  for (int n = 1; n <= 3; ++n) {
    std::set<MatchedMap> covered;
    const auto bases = bridgeless_maps(n);
    EXPECT_EQ(static_cast<long>(bases.size()), loopless[n - 1]);
    for (const auto& b : bases) {
      const MatchedMap t = truncate_map(b);
      const auto red = flippable_edges(t);
      std::set<MatchedMap> fiber;
      for (int mask = 0; mask < (1 << red.size()); ++mask) {
        std::vector<int> flips;
        for (std::size_t i = 0; i < red.size(); ++i) {
          if (mask >> i & 1) flips.push_back(red[i]);
        }
        const MatchedMap mm = canonicalize(apply_flips(t, flips));
        EXPECT_FALSE(has_bridge(mm.map));
        fiber.insert(mm);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
          const NormalizeResult r = normalize_and_recover(mm, seed);
          EXPECT_EQ(r.base, b);
          EXPECT_EQ(r.good, canonicalize(t));
        }
      }
      EXPECT_EQ(fiber.size(), std::size_t{1} << (n - 1));
      for (const auto& mm : fiber) EXPECT_TRUE(covered.insert(mm).second);
    }
    EXPECT_EQ(covered, rooted_matched_maps(n, true)) << n;
    EXPECT_EQ(Integer(static_cast<unsigned long>(3 * covered.size())),
              closed_form_count(CountKind::MatchedBridgeless, n));
  }
}

TEST(Normalize, GoodMapsNeedNoFlips) {
  for (const auto& b : bridgeless_maps(3)) {
    EXPECT_EQ(normalize_and_recover(truncate_map(b)).flips, 0);
  }
}

}  // namespace
}  // namespace cubicpm
