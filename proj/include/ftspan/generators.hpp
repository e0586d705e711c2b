#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "ftspan/graph.hpp"

namespace ftspan {

struct WeightMode {
  enum class Kind { unit, uniform } kind = Kind::unit;
  double lo = 1.0;
  double hi = 1.0;

  static WeightMode unit() { return {}; }
  static WeightMode uniform(double lo, double hi) {
    return {Kind::uniform, lo, hi};
  }
};

// "unit" or "uniform:<lo>,<hi>".
WeightMode parse_weight_mode(std::string_view text);

// Uniformly random simple graph with exactly m edges. Throws UsageError when
// m > C(n, 2).
WeightedGraph gen_random(std::size_t n, std::size_t m, WeightMode weights,
                         std::uint64_t seed);

// Uniformly random simple r-regular graph by the pairing model with
// rejection. Throws UsageError when n*r is odd or r >= n (r > 0).
WeightedGraph gen_regular(std::size_t n, std::size_t r, std::uint64_t seed);

// Bipartite blow-up: nodes 0..left_count-1 form the left side. Every left
// node gets copies_left copies, every right node copies_right copies, and each
// edge (u, v) becomes all copies_left * copies_right edges (u_i, v_j) with the
// original weight. Left copies of u are u*copies_left + i; right copies of v
// follow all left copies. Throws UsageError if an edge does not cross sides.
WeightedGraph blow_up(const WeightedGraph& g, std::size_t left_count,
                      std::size_t copies_left, std::size_t copies_right);

// Small named graphs used by tests and examples.
WeightedGraph cycle_graph(std::size_t n, double weight = 1.0);
WeightedGraph complete_graph(std::size_t n, double weight = 1.0);
WeightedGraph petersen_graph();

}  // namespace ftspan
