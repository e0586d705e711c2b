#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ftspan/blocking_sets.hpp"
#include "ftspan/graph.hpp"

namespace ftspan {

struct PathFlags {
  bool simple = false;
  bool edge_simple = false;
  bool alternating = false;
  bool unblocked = true;
};

// An oriented walk: nodes[i] -- nodes[i+1] is edges[i].
struct PathRecord {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
  PathFlags flags;

  std::size_t length() const { return edges.size(); }
};

// With 1-based positions, every even-position edge is canonically heavier
// than its odd-position neighbors (the last edge of an even-length sequence
// only needs to beat its predecessor).
bool is_alternating(std::span<const EdgeId> edges);

// True iff some block has both of its edges on the path. Heaviness plays no
// role here, unlike for cycles.
bool is_blocked(std::span<const EdgeId> edges, const StrongBlockingSet& b);
bool is_blocked(const PathRecord& path, const StrongBlockingSet& b);

// Builds the record for the walk from `start` along `edges` and fills its
// flags (unblocked is computed only when b is given). Throws UsageError if
// consecutive edges do not chain.
PathRecord make_path(const WeightedGraph& g, NodeId start,
                     std::vector<EdgeId> edges,
                     const StrongBlockingSet* b = nullptr);

// An edge-simple alternating k-path, or nullopt if none exists. Tries the
// constructive peeling first (strip each node's lightest incident edge for
// odd k, heaviest for even k, recurse, then extend by the stripped edge at
// the path's end) and falls back to exhaustive search.
std::optional<PathRecord> find_alternating_kpath(const WeightedGraph& g,
                                                 std::size_t k);
// The peeling alone. Guaranteed to succeed when m >= k n.
std::optional<PathRecord> peel_alternating_kpath(const WeightedGraph& g,
                                                 std::size_t k);

// Enumeration domain for count_paths. `alternating` prunes non-alternating
// prefixes, so every counter in the report is then restricted to
// alternating paths.
enum class PathFilter { all, alternating };

struct PathCounts {
  std::uint64_t simple = 0;
  std::uint64_t alternating = 0;            // simple and alternating
  std::uint64_t unblocked_alternating = 0;  // simple, alternating, unblocked
  std::uint64_t edge_simple = 0;
  std::uint64_t edge_simple_alternating = 0;
  std::uint64_t edge_simple_unblocked_alternating = 0;

  PathCounts& operator+=(const PathCounts& o);
  friend bool operator==(const PathCounts&, const PathCounts&) = default;
};

struct CensusRow {
  NodeId s = 0;
  NodeId t = 0;
  std::size_t j = 0;
  PathCounts counts;
};

// Oriented path counts: s->t and t->s are counted separately.
struct CensusReport {
  std::size_t j = 0;
  PathFilter filter = PathFilter::all;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double average_degree = 0.0;
  std::vector<CensusRow> rows;  // pairs with at least one edge-simple path
  PathCounts totals;

  PathCounts at(NodeId s, NodeId t) const;
};

struct CensusLimits {
  std::size_t max_nodes = 30;
  std::size_t max_length = 5;
  bool force = false;
};

// Exhaustive enumeration of all edge-simple paths with exactly j edges.
// Throws BudgetExceeded beyond the limits unless limits.force.
CensusReport count_paths(const WeightedGraph& g, const StrongBlockingSet& b,
                         std::size_t j, PathFilter filter = PathFilter::all,
                         CensusLimits limits = {});

// CSV with a schema line, then `s,t,j,simple,alternating,unblocked_alternating`.
void write_census_csv(std::ostream& out, std::span<const CensusReport> reports);

struct ChokeSet {
  NodeId s = 0;
  NodeId t = 0;
  std::vector<EdgeId> edges;  // in the order they were chosen
  std::size_t paths_examined = 0;

  bool contains(EdgeId e) const;
};

// Collects, heaviest first, the heaviest edge of every simple unblocked s->t
// path with at most k edges. Requires every edge of h to lie in at most f
// blocks; then |edges| <= k f + 1. Throws UsageError otherwise.
ChokeSet build_choke_set(const WeightedGraph& h, const StrongBlockingSet& b,
                         NodeId s, NodeId t, std::size_t k, std::size_t f);

struct DispersionLevel {
  std::size_t j = 0;
  std::size_t exponent = 0;  // (j-1)/2 for odd j, j/2 for even j
  double bound = 1.0;        // (c k^2 f)^exponent
  std::uint64_t max_count = 0;
  NodeId argmax_s = 0;
  NodeId argmax_t = 0;
  // Smallest c that would still admit max_count; 0 when exponent is 0.
  double empirical_constant = 0.0;
};

struct DispersionReport {
  bool ok = true;
  double c = 0.0;
  std::vector<DispersionLevel> levels;  // j = 0..k
  double max_empirical_constant = 0.0;
};

// For all (s,t) and j <= k, counts simple unblocked alternating s->t paths
// of length j and compares against (c k^2 f)^exponent(j).
DispersionReport check_dispersion(const WeightedGraph& h,
                                  const StrongBlockingSet& b, std::size_t k,
                                  std::size_t f, double c,
                                  CensusLimits limits = {});

struct SplitResult {
  WeightedGraph graph;
  StrongBlockingSet blocks;        // same edge ids as the input
  std::vector<NodeId> node_origin; // new node -> original node
  double threshold = 0.0;          // 4 * original average degree
};

// While a node has degree >= 4d (d the original average degree) and at least
// two edges, move the upper half of its incident edges (by edge id) to a new
// node. Edge ids and canonical order are preserved.
SplitResult split_high_degree(const WeightedGraph& h,
                              const StrongBlockingSet& b);

struct SampledSubgraph {
  WeightedGraph graph;
  StrongBlockingSet blocks;
  std::vector<EdgeId> original_edge;
};

// Keeps each edge independently with probability p; keeps blocks whose edges
// both survive. Deterministic in seed.
SampledSubgraph random_edge_subsample(const WeightedGraph& h,
                                      const StrongBlockingSet& b, double p,
                                      std::uint64_t seed);

// One point of the subsampling experiment behind the full counting bound.
struct AlphaSample {
  double p = 0.0;
  std::size_t edges = 0;
  double average_degree = 0.0;
  std::uint64_t alpha = 0;  // unblocked simple alternating k-paths
};

struct AlphaTrend {
  std::vector<AlphaSample> samples;
  // Least-squares slope of log(alpha) against log(average degree) over
  // samples with alpha > 0; nullopt with fewer than two such samples.
  std::optional<double> slope;
};

AlphaTrend alpha_trend(const WeightedGraph& h, const StrongBlockingSet& b,
                       std::size_t k, std::span<const double> probabilities,
                       std::uint64_t seed, CensusLimits limits = {});

}  // namespace ftspan
