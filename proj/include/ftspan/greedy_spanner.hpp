#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string_view>
#include <vector>

#include "ftspan/graph.hpp"

namespace ftspan {

enum class Algorithm { exact, approximate };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

// Edge ids in a trace refer to the spanner graph, not the input graph.
struct GreedyTrace {
  std::vector<EdgeId> kept;             // in consideration order
  std::map<EdgeId, FaultSet> forcing;   // F_e for each kept e
};

struct SpannerResult {
  WeightedGraph spanner;
  // For each spanner edge id, the corresponding input edge id.
  std::vector<EdgeId> input_edge;
  GreedyTrace trace;
  std::size_t f = 0;
  std::size_t k = 1;
  Algorithm algorithm = Algorithm::exact;

  std::size_t stretch() const { return 2 * k - 1; }
};

// Optional guard on the exact decision's branch-and-bound effort, summed over
// the whole run. Zero means unlimited.
struct GreedyOptions {
  std::size_t branch_budget = 0;
};

// Consider input edges in canonical order and keep (u,v) iff some fault set
// of at most f spanner edges pushes the spanner distance between u and v
// above (2k-1) w(u,v). Throws BudgetExceeded if the branch budget runs out.
SpannerResult ft_greedy_exact(const WeightedGraph& g, std::size_t f,
                              std::size_t k, GreedyOptions options = {});

// Same loop with the polynomial covering decision on the hop metric.
SpannerResult ft_greedy_approx(const WeightedGraph& g, std::size_t f,
                               std::size_t k);

SpannerResult ft_greedy(const WeightedGraph& g, std::size_t f, std::size_t k,
                        Algorithm algorithm, GreedyOptions options = {});

// Trace text format:
//   ftspan-trace v1
//   algorithm <exact|approx> f <f> k <k>
//   <e>: <x1> <x2> ...          one line per kept edge, spanner edge ids
void write_trace(std::ostream& out, const SpannerResult& result);

struct TraceFile {
  Algorithm algorithm = Algorithm::exact;
  std::size_t f = 0;
  std::size_t k = 1;
  GreedyTrace trace;
};
TraceFile read_trace(std::istream& in);

}  // namespace ftspan
