#pragma once

#include <cstddef>

#include "ftspan/graph.hpp"

namespace ftspan {

// How path length is measured by the exact decision.
enum class Metric { weighted, hops };

struct FaultDecision {
  bool yes = false;
  FaultSet witness;  // meaningful only when yes
  std::size_t branches = 0;
};

// Is there F ⊆ E(h) \ {(u,v)}, |F| <= f, with dist_{h \ F}(u, v) > threshold?
//
// Branch and bound: find a min-weight (then fewest-edge) u-v path within the
// threshold; if none exists the current F is a witness, otherwise some edge of
// that path must be in F, so branch on each of them. Branch i forbids faulting
// the path edges tried by branches 1..i-1, so no fault set is explored twice.
//
// `absent` marks edges of h to treat as nonexistent (the greedy uses it to
// query a partial spanner without materializing it).
FaultDecision exact_fault_decision(const WeightedGraph& h, NodeId u, NodeId v,
                                   std::size_t f, double threshold,
                                   Metric metric = Metric::weighted);
FaultDecision exact_fault_decision(const WeightedGraph& h,
                                   const EdgeMask& absent, NodeId u, NodeId v,
                                   std::size_t f, double threshold,
                                   Metric metric = Metric::weighted);

struct ApproxDecision {
  bool yes = false;
  // Union of the short paths removed; |cover| <= (2k-1) * iterations.
  FaultSet cover;
  std::size_t iterations = 0;
};

// Frequency-style set cover on the unweighted view of h: while a u-v path of
// at most 2k-1 hops survives, fault all of its edges, for at most f rounds.
// YES iff no such path remains. Paths come from BFS with smallest-id
// neighbor order, so the result is deterministic.
//
// If OPT <= f then YES; if YES then `cover` is a hop-bounded cut of size at
// most (2k-1) f.
ApproxDecision approx_fault_decision(const WeightedGraph& h, NodeId u, NodeId v,
                                     std::size_t f, std::size_t k);
ApproxDecision approx_fault_decision(const WeightedGraph& h,
                                     const EdgeMask& absent, NodeId u, NodeId v,
                                     std::size_t f, std::size_t k);

}  // namespace ftspan
