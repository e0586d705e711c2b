#include <gtest/gtest.h>

#include <sstream>

#include "ftspan/eft_verify.hpp"
#include "ftspan/errors.hpp"
#include "ftspan/generators.hpp"
#include "ftspan/greedy_spanner.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace ftspan;

TEST(ExactGreedy, CycleKeepsEverything) {
  auto r = ft_greedy_exact(cycle_graph(5), 0, 2);
  EXPECT_EQ(r.spanner.edge_count(), 5u);
}

TEST(ExactGreedy, PetersenIsItsOwnSpanner) {
  auto r = ft_greedy_exact(petersen_graph(), 3, 2);
  EXPECT_EQ(r.spanner.edge_count(), 15u);
}

TEST(ExactGreedy, ZeroFaultsMatchesClassicGreedy) {
  // f = 0 is the classic greedy spanner.
  WeightedGraph g = complete_graph(6);
  auto r = ft_greedy_exact(g, 0, 2);
  EXPECT_EQ(r.spanner.edge_count(), 5u);  // a star: every other pair at 2 hops
}

TEST(ExactGreedy, MatchesBruteForceGreedy) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t f = seed % 3, k = 1 + seed % 3;
    WeightedGraph g = testing_util::random_graph(8, 10 + seed % 7, seed % 2, seed);
    auto r = ft_greedy_exact(g, f, k);
    EXPECT_EQ(r.input_edge, oracle::ft_greedy(g, f, k)) << "seed " << seed;
  }
}

TEST(ExactGreedy, TraceIsConsistent) {
  WeightedGraph g = testing_util::random_graph(9, 18, false, 11);
  auto r = ft_greedy_exact(g, 2, 2);
  ASSERT_EQ(r.trace.kept.size(), r.spanner.edge_count());
  for (std::size_t i = 0; i < r.trace.kept.size(); ++i) {
    EXPECT_EQ(r.trace.kept[i], i);
    const FaultSet& forcing = r.trace.forcing.at(static_cast<EdgeId>(i));
    EXPECT_LE(forcing.size(), 2u);
    // F_e only uses edges kept before e, and really does stretch (u,v).
    EdgeMask removed(r.spanner.edge_count());
    for (EdgeId x : forcing) {
      EXPECT_LT(x, i);
      removed.insert(x);
    }
    for (EdgeId later = static_cast<EdgeId>(i); later < r.spanner.edge_count(); ++later)
      removed.insert(later);
    const Edge& e = r.spanner.edge(static_cast<EdgeId>(i));
    EXPECT_FALSE(weighted_distance(r.spanner, e.u, e.v, removed) <= 3.0 * e.weight);
  }
}

TEST(ExactGreedy, BranchBudget) {
  WeightedGraph g = testing_util::random_graph(10, 30, true, 3);
  EXPECT_THROW(ft_greedy_exact(g, 3, 2, {5}), BudgetExceeded);
}

TEST(ApproxGreedy, ForestUnchanged) {
  WeightedGraph tree(6, {{0, 1, 3}, {1, 2, 1}, {1, 3, 2}, {3, 4, 5}, {4, 5, 1}});
  for (std::size_t f : {0u, 1u, 2u}) {
    EXPECT_EQ(ft_greedy_approx(tree, f, 2).spanner.edge_count(), 5u);
    EXPECT_EQ(ft_greedy_exact(tree, f, 2).spanner.edge_count(), 5u);
  }
  EXPECT_EQ(ft_greedy_approx(cycle_graph(5), 0, 2).spanner.edge_count(), 5u);
}

TEST(ApproxGreedy, CoverSizesInTrace) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t f = 1 + seed % 2, k = 1 + seed % 3;
    WeightedGraph g = testing_util::random_graph(9, 20, seed % 2, seed);
    auto r = ft_greedy_approx(g, f, k);
    for (const auto& [e, cover] : r.trace.forcing) {
      EXPECT_LE(cover.size(), (2 * k - 1) * f);
      for (EdgeId x : cover) EXPECT_LT(x, e);
    }
  }
}

TEST(Greedy, BothOutputsAreEftSpanners) {
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const std::size_t f = seed % 3, k = 1 + seed % 3;
    WeightedGraph g = testing_util::random_graph(7, 12, seed % 2, seed + 50);
    for (Algorithm a : {Algorithm::exact, Algorithm::approximate}) {
      auto r = ft_greedy(g, f, k, a);
      EXPECT_TRUE(oracle::is_eft_spanner(g, r.input_edge, f, k))
          << "seed " << seed << " " << to_string(a);
    }
  }
}

TEST(Greedy, AlgorithmNames) {
  EXPECT_EQ(parse_algorithm("exact"), Algorithm::exact);
  EXPECT_EQ(parse_algorithm("approx"), Algorithm::approximate);
  EXPECT_THROW(parse_algorithm("fast"), UsageError);
  EXPECT_THROW(ft_greedy_exact(cycle_graph(4), 1, 0), UsageError);
}

TEST(Trace, RoundTrip) {
  auto r = ft_greedy_exact(testing_util::random_graph(8, 16, false, 4), 1, 2);
  std::stringstream s;
  write_trace(s, r);
  TraceFile t = read_trace(s);
  EXPECT_EQ(t.algorithm, Algorithm::exact);
  EXPECT_EQ(t.f, 1u);
  EXPECT_EQ(t.k, 2u);
  EXPECT_EQ(t.trace.kept, r.trace.kept);
  EXPECT_EQ(t.trace.forcing, r.trace.forcing);
}

TEST(Trace, RejectsGarbage) {
  std::stringstream s("ftspan-trace v1\nalgorithm exact f 1 k 2\n0 1 2\n");
  EXPECT_THROW(read_trace(s), ParseError);
  std::stringstream wrong("not a trace\n");
  EXPECT_THROW(read_trace(wrong), ParseError);
}
