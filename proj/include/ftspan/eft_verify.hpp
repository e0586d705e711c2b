#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ftspan/graph.hpp"

namespace ftspan {

enum class VerifyMode { exhaustive, sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::exhaustive;
  std::size_t trials = 1000;  // sampled mode
  std::uint64_t seed = 1;     // sampled mode
  // Exhaustive mode refuses when (number of fault sets) * n^2 exceeds this.
  double budget = 5e8;
  bool force = false;
  // Worker threads for exhaustive mode; 0 picks hardware concurrency.
  std::size_t threads = 0;
};

struct Violation {
  FaultSet faults;  // ids in g
  NodeId u = 0;
  NodeId v = 0;
  Distance in_spanner;
  Distance in_graph;
};

struct EftVerdict {
  bool ok = true;
  std::optional<Violation> violation;
  std::size_t fault_sets_checked = 0;
};

// Checks d_{h\F}(u,v) <= (2k-1) d_{g\F}(u,v) for every pair and every fault
// set F of at most f edges of g (exhaustive), or for `trials` uniformly drawn
// f-edge fault sets (sampled). Pairs disconnected in g \ F are satisfied.
// The reported violation is the first in enumeration order.
//
// Throws UsageError if h is not a subgraph of g on the same node set, and
// BudgetExceeded if an exhaustive run would exceed options.budget.
EftVerdict verify_eft(const WeightedGraph& g, const WeightedGraph& h,
                      std::size_t f, std::size_t k, VerifyOptions options = {});

// Number of fault sets an exhaustive run visits: sum_{i<=f} C(m, i).
double fault_set_count(std::size_t m, std::size_t f);

// FAULTS=<e1,e2,...> PAIR=u,v DH=<val> DG=<val>
std::string format_violation(const Violation& v);

}  // namespace ftspan
