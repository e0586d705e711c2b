#include <gtest/gtest.h>

#include <sstream>

#include "ftspan/errors.hpp"
#include "ftspan/generators.hpp"
#include "ftspan/graph_io.hpp"

using namespace ftspan;

TEST(GenRandom, Examples) {
  WeightedGraph k5 = gen_random(5, 10, WeightMode::unit(), 3);
  EXPECT_EQ(k5.edge_count(), 10u);
  for (NodeId x = 0; x < 5; ++x) EXPECT_EQ(k5.degree(x), 4u);
  EXPECT_EQ(gen_random(10, 0, WeightMode::unit(), 3).edge_count(), 0u);
  EXPECT_THROW(gen_random(5, 11, WeightMode::unit(), 3), UsageError);
}

TEST(GenRandom, Deterministic) {
  auto a = gen_random(20, 50, WeightMode::uniform(1, 2), 7);
  auto b = gen_random(20, 50, WeightMode::uniform(1, 2), 7);
  std::ostringstream sa, sb;
  write_graph(sa, a);
  write_graph(sb, b);
  EXPECT_EQ(sa.str(), sb.str());
  auto c = gen_random(20, 50, WeightMode::uniform(1, 2), 8);
  std::ostringstream sc;
  write_graph(sc, c);
  EXPECT_NE(sa.str(), sc.str());
  for (const Edge& e : a.edges()) {
    EXPECT_GE(e.weight, 1.0);
    EXPECT_LE(e.weight, 2.0);
  }
}

TEST(GenRandom, LargeSparseUsesRejection) {
  auto g = gen_random(4000, 3000, WeightMode::unit(), 1);
  EXPECT_EQ(g.edge_count(), 3000u);
}

TEST(WeightMode, Parse) {
  EXPECT_EQ(parse_weight_mode("unit").kind, WeightMode::Kind::unit);
  auto u = parse_weight_mode("uniform:1.5,4");
  EXPECT_EQ(u.kind, WeightMode::Kind::uniform);
  EXPECT_EQ(u.lo, 1.5);
  EXPECT_EQ(u.hi, 4.0);
  EXPECT_THROW(parse_weight_mode("uniform:4,1"), UsageError);
  EXPECT_THROW(parse_weight_mode("gaussian"), UsageError);
  EXPECT_THROW(parse_weight_mode("uniform:x,1"), UsageError);
}

TEST(GenRegular, Examples) {
  WeightedGraph k4 = gen_regular(4, 3, 1);
  EXPECT_EQ(k4.edge_count(), 6u);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    WeightedGraph g = gen_regular(10, 3, seed);
    for (NodeId x = 0; x < 10; ++x) EXPECT_EQ(g.degree(x), 3u);
  }
  EXPECT_THROW(gen_regular(5, 3, 1), UsageError);
  EXPECT_THROW(gen_regular(4, 4, 1), UsageError);
  EXPECT_EQ(gen_regular(6, 0, 1).edge_count(), 0u);
}

TEST(BlowUp, Identity) {
  // C6 with sides {0,2,4} | {1,3,5} relabeled to 0..2 | 3..5.
  WeightedGraph bip(6, {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}});
  auto same = blow_up(bip, 3, 1, 1);
  EXPECT_EQ(same.node_count(), 6u);
  EXPECT_EQ(same.edge_count(), 6u);
  for (const Edge& e : bip.edges()) EXPECT_TRUE(same.find_edge(e.u, e.v));
}

TEST(BlowUp, SingleEdgeToK23) {
  WeightedGraph edge(2, {{0, 1, 2.5}});
  auto k23 = blow_up(edge, 1, 2, 3);
  EXPECT_EQ(k23.node_count(), 5u);
  EXPECT_EQ(k23.edge_count(), 6u);
  for (NodeId a = 0; a < 2; ++a)
    for (NodeId b = 2; b < 5; ++b) {
      auto e = k23.find_edge(a, b);
      ASSERT_TRUE(e);
      EXPECT_EQ(k23.edge(*e).weight, 2.5);
    }
}

TEST(BlowUp, Errors) {
  WeightedGraph tri = cycle_graph(3);
  EXPECT_THROW(blow_up(tri, 1, 1, 1), UsageError);
  EXPECT_THROW(blow_up(WeightedGraph(2, {{0, 1}}), 1, 0, 1), UsageError);
}

TEST(Named, Shapes) {
  EXPECT_EQ(cycle_graph(7).edge_count(), 7u);
  EXPECT_EQ(complete_graph(6).edge_count(), 15u);
  WeightedGraph p = petersen_graph();
  EXPECT_EQ(p.edge_count(), 15u);
  for (NodeId x = 0; x < 10; ++x) EXPECT_EQ(p.degree(x), 3u);
}
