#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ftspan/extended.hpp"

namespace ftspan {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// An edge as supplied by a caller, before canonical ordering.
struct EdgeSpec {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;
};

struct Edge {
  NodeId u = 0;  // u < v
  NodeId v = 0;
  double weight = 1.0;
  // Secondary sort key among equal weights. Defaults to (u, v); graphs derived
  // by node splitting inherit the key of the edge they were derived from so
  // that the canonical order survives the rewrite.
  std::pair<NodeId, NodeId> tiebreak;

  NodeId other(NodeId x) const { return x == u ? v : u; }
  bool has_endpoint(NodeId x) const { return x == u || x == v; }
};

struct Incidence {
  NodeId neighbor = 0;
  EdgeId edge = 0;
};

// Dense boolean membership over edge ids.
class EdgeMask {
 public:
  EdgeMask() = default;
  explicit EdgeMask(std::size_t edge_count, bool value = false)
      : bits_(edge_count, value ? 1 : 0) {}

  std::size_t size() const { return bits_.size(); }
  bool contains(EdgeId e) const { return bits_[e] != 0; }
  void insert(EdgeId e) { bits_[e] = 1; }
  void erase(EdgeId e) { bits_[e] = 0; }
  void set(EdgeId e, bool value) { bits_[e] = value ? 1 : 0; }
  std::size_t count() const;

 private:
  std::vector<std::uint8_t> bits_;
};

// A sorted, duplicate-free set of edge ids.
class FaultSet {
 public:
  FaultSet() = default;
  FaultSet(std::initializer_list<EdgeId> edges);
  explicit FaultSet(std::vector<EdgeId> edges);

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(EdgeId e) const;
  void insert(EdgeId e);
  std::span<const EdgeId> edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  EdgeMask to_mask(std::size_t edge_count) const;

  friend bool operator==(const FaultSet&, const FaultSet&) = default;

 private:
  std::vector<EdgeId> edges_;
};

// Simple undirected graph with non-negative weights.
//
// Edge ids are positions in the canonical order: edges sorted by
// (weight, tiebreak) with the default tiebreak being the sorted endpoint pair.
// Hence e < e' iff e is canonically lighter than e', and the heaviest edge of
// any set is simply its largest id. Immutable after construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Throws UsageError on self-loops, duplicate pairs, negative or non-finite
  // weights, or endpoints >= node_count.
  WeightedGraph(std::size_t node_count, std::vector<EdgeSpec> edges);

  // As above, with an explicit tiebreak key per input edge. Keys must be
  // unique among edges of equal weight.
  static WeightedGraph with_tiebreak_keys(
      std::size_t node_count, std::vector<EdgeSpec> edges,
      std::vector<std::pair<NodeId, NodeId>> keys);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  double average_degree() const;

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::vector<EdgeSpec> edge_specs() const;

  // Incident edges of x, sorted by neighbor id.
  std::span<const Incidence> incident(NodeId x) const {
    return {adjacency_.data() + offsets_[x],
            adjacency_.data() + offsets_[x + 1]};
  }
  std::size_t degree(NodeId x) const { return offsets_[x + 1] - offsets_[x]; }

  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;

  // Canonical-heaviest edge of a nonempty set.
  static EdgeId heaviest(std::span<const EdgeId> edges);

  // Same node set, edges restricted to `keep`. Tiebreak keys carry over, so
  // the relative canonical order of surviving edges is unchanged. If
  // `original` is given it receives, per new edge id, the id in this graph.
  WeightedGraph subgraph(const EdgeMask& keep,
                         std::vector<EdgeId>* original = nullptr) const;

  void check_node(NodeId x) const;
  void check_edge(EdgeId e) const;

 private:
  void build(std::vector<Edge> edges);

  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
};

// Shortest-path weight in g with the excluded edges removed. d(s,s) = 0.
Distance weighted_distance(const WeightedGraph& g, NodeId s, NodeId t,
                           const FaultSet& excluded = {});
Distance weighted_distance(const WeightedGraph& g, NodeId s, NodeId t,
                           const EdgeMask& removed);

// Number of edges on a fewest-edge path, ignoring weights.
HopCount hop_distance(const WeightedGraph& g, NodeId s, NodeId t,
                      const FaultSet& excluded = {});
HopCount hop_distance(const WeightedGraph& g, NodeId s, NodeId t,
                      const EdgeMask& removed);

// Single-source weighted distances to every node.
std::vector<Distance> weighted_distances_from(const WeightedGraph& g, NodeId s,
                                              const EdgeMask& removed);

// A minimum-weight s->t path, fewest edges among those of minimum weight,
// whose weight is <= bound. Edges are listed from s to t. Returns nullopt if
// no such path exists.
std::optional<std::vector<EdgeId>> shortest_path_within(
    const WeightedGraph& g, NodeId s, NodeId t, const EdgeMask& removed,
    double bound);

// A fewest-edge s->t path with at most max_hops edges. BFS explores
// neighbors in increasing node id, so the returned path is deterministic.
std::optional<std::vector<EdgeId>> shortest_hop_path_within(
    const WeightedGraph& g, NodeId s, NodeId t, const EdgeMask& removed,
    long max_hops);

// Length in edges of a shortest cycle; infinite for forests.
HopCount girth(const WeightedGraph& g);

struct Cycle {
  std::vector<NodeId> nodes;  // nodes[i] -- nodes[i+1] is edges[i], closing
  std::vector<EdgeId> edges;  // back to nodes[0]
};

// Calls visit once per simple cycle with at most max_len edges (each cycle is
// reported once, regardless of rotation or direction). Enumeration stops early
// if visit returns false. Returns false iff it was stopped early.
bool for_each_cycle(const WeightedGraph& g, std::size_t max_len,
                    const std::function<bool(const Cycle&)>& visit);

std::vector<Cycle> enumerate_cycles(const WeightedGraph& g,
                                    std::size_t max_len);

}  // namespace ftspan
