#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "ftspan/graph.hpp"

namespace ftspan {

// Text format:
//   # comment lines anywhere
//   n m
//   [L <left count>]      (bipartite files only)
//   u v [w]               (m lines, 0-based nodes, w defaults to 1.0)
struct GraphFile {
  WeightedGraph graph;
  std::optional<std::size_t> left_count;
};

GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::filesystem::path& path);

// Edges are written in canonical id order with shortest round-trip weights,
// so write -> read reproduces the same edge ids.
void write_graph(std::ostream& out, const WeightedGraph& g,
                 std::optional<std::size_t> left_count = std::nullopt);
void write_graph_file(const std::filesystem::path& path, const WeightedGraph& g,
                      std::optional<std::size_t> left_count = std::nullopt);

// Shortest decimal representation that parses back to the same double.
std::string format_weight(double w);

}  // namespace ftspan
