#include <gtest/gtest.h>

#include <sstream>

#include "ftspan/errors.hpp"
#include "ftspan/generators.hpp"
#include "ftspan/graph_io.hpp"

using namespace ftspan;

TEST(GraphIo, ReadsCommentsAndDefaults) {
  std::istringstream in("# header\n3 2\n0 1\n# mid\n1 2 2.5  # trailing\n");
  GraphFile f = read_graph(in);
  EXPECT_EQ(f.graph.node_count(), 3u);
  EXPECT_EQ(f.graph.edge_count(), 2u);
  EXPECT_EQ(f.graph.edge(0).weight, 1.0);
  EXPECT_EQ(f.graph.edge(1).weight, 2.5);
  EXPECT_FALSE(f.left_count);
}

TEST(GraphIo, LeftCount) {
  std::istringstream in("4 1\nL 2\n0 3\n");
  EXPECT_EQ(read_graph(in).left_count, std::optional<std::size_t>(2));
}

TEST(GraphIo, Errors) {
  for (const char* bad : {"", "3\n", "3 2\n0 1\n", "3 1\n0 1 x\n", "3 1\n0 5\n",
                          "3 1\n0 0\n", "3 2\n0 1\n1 0\n", "3 1\n0 1 -2\n",
                          "3 1\n0 1 1 9\n", "3 1\nL 9\n0 1\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_graph(in), ParseError) << bad;
  }
}

TEST(GraphIo, RoundTripPreservesIds) {
  auto g = gen_random(15, 40, WeightMode::uniform(0.1, 7.3), 9);
  std::stringstream s;
  write_graph(s, g, 4);
  GraphFile back = read_graph(s);
  ASSERT_EQ(back.graph.edge_count(), g.edge_count());
  EXPECT_EQ(back.left_count, std::optional<std::size_t>(4));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    EXPECT_EQ(back.graph.edge(e).u, g.edge(e).u);
    EXPECT_EQ(back.graph.edge(e).v, g.edge(e).v);
    EXPECT_EQ(back.graph.edge(e).weight, g.edge(e).weight);
  }
}

TEST(GraphIo, FormatWeight) {
  EXPECT_EQ(format_weight(1.0), "1");
  EXPECT_EQ(format_weight(2.5), "2.5");
  EXPECT_EQ(format_weight(0.1), "0.1");
}

TEST(GraphIo, MissingFile) {
  EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), ParseError);
}
