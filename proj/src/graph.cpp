#include "ftspan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

#include "ftspan/errors.hpp"

namespace ftspan {

std::size_t EdgeMask::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

FaultSet::FaultSet(std::initializer_list<EdgeId> edges)
    : FaultSet(std::vector<EdgeId>(edges)) {}

FaultSet::FaultSet(std::vector<EdgeId> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool FaultSet::contains(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

void FaultSet::insert(EdgeId e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

EdgeMask FaultSet::to_mask(std::size_t edge_count) const {
  EdgeMask mask(edge_count);
  for (EdgeId e : edges_) {
    if (e >= edge_count) {
      throw UsageError("fault set edge " + std::to_string(e) +
                       " out of range");
    }
    mask.insert(e);
  }
  return mask;
}

WeightedGraph::WeightedGraph(std::size_t node_count,
                             std::vector<EdgeSpec> edges)
    : node_count_(node_count) {
  std::vector<Edge> full;
  full.reserve(edges.size());
  for (const EdgeSpec& s : edges) {
    Edge e{std::min(s.u, s.v), std::max(s.u, s.v), s.weight, {}};
    e.tiebreak = {e.u, e.v};
    full.push_back(e);
  }
  build(std::move(full));
}

WeightedGraph WeightedGraph::with_tiebreak_keys(
    std::size_t node_count, std::vector<EdgeSpec> edges,
    std::vector<std::pair<NodeId, NodeId>> keys) {
  if (keys.size() != edges.size()) {
    throw UsageError("tiebreak key count does not match edge count");
  }
  WeightedGraph g;
  g.node_count_ = node_count;
  std::vector<Edge> full;
  full.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& s = edges[i];
    full.push_back(
        Edge{std::min(s.u, s.v), std::max(s.u, s.v), s.weight, keys[i]});
  }
  g.build(std::move(full));
  return g;
}

void WeightedGraph::build(std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (e.v >= node_count_) {
      throw UsageError("edge endpoint " + std::to_string(e.v) +
                       " out of range for " + std::to_string(node_count_) +
                       " nodes");
    }
    if (e.u == e.v) {
      throw UsageError("self-loop at node " + std::to_string(e.u));
    }
    if (!std::isfinite(e.weight) || e.weight < 0) {
      throw UsageError("edge weights must be finite and non-negative");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.weight, a.tiebreak) < std::tie(b.weight, b.tiebreak);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].weight == edges[i - 1].weight &&
        edges[i].tiebreak == edges[i - 1].tiebreak) {
      throw UsageError("canonical order is not strict (duplicate tiebreak)");
    }
  }
  edges_ = std::move(edges);

  std::vector<std::size_t> degree(node_count_, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(node_count_ + 1, 0);
  for (std::size_t x = 0; x < node_count_; ++x) {
    offsets_[x + 1] = offsets_[x] + degree[x];
  }
  adjacency_.assign(offsets_.back(), Incidence{});
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]++] = Incidence{e.v, id};
    adjacency_[fill[e.v]++] = Incidence{e.u, id};
  }
  for (std::size_t x = 0; x < node_count_; ++x) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[x]);
    auto last =
        adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[x + 1]);
    std::sort(first, last, [](const Incidence& a, const Incidence& b) {
      return a.neighbor < b.neighbor;
    });
    for (auto it = first; it != last && it + 1 != last; ++it) {
      if (it->neighbor == (it + 1)->neighbor) {
        throw UsageError("duplicate edge between " + std::to_string(x) +
                         " and " + std::to_string(it->neighbor));
      }
    }
  }
}

double WeightedGraph::average_degree() const {
  if (node_count_ == 0) return 0.0;
  return 2.0 * static_cast<double>(edges_.size()) /
         static_cast<double>(node_count_);
}

std::vector<EdgeSpec> WeightedGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back({e.u, e.v, e.weight});
  return out;
}

std::optional<EdgeId> WeightedGraph::find_edge(NodeId a, NodeId b) const {
  if (a >= node_count_ || b >= node_count_) return std::nullopt;
  auto inc = incident(a);
  auto it = std::lower_bound(
      inc.begin(), inc.end(), b,
      [](const Incidence& i, NodeId x) { return i.neighbor < x; });
  if (it != inc.end() && it->neighbor == b) return it->edge;
  return std::nullopt;
}

EdgeId WeightedGraph::heaviest(std::span<const EdgeId> edges) {
  if (edges.empty()) throw UsageError("heaviest edge of an empty set");
  return *std::max_element(edges.begin(), edges.end());
}

WeightedGraph WeightedGraph::subgraph(const EdgeMask& keep,
                                      std::vector<EdgeId>* original) const {
  std::vector<EdgeSpec> specs;
  std::vector<std::pair<NodeId, NodeId>> keys;
  if (original) original->clear();
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    if (!keep.contains(id)) continue;
    const Edge& e = edges_[id];
    specs.push_back({e.u, e.v, e.weight});
    keys.push_back(e.tiebreak);
    if (original) original->push_back(id);
  }
  // Edges are appended in canonical order, so new id i maps to original[i].
  return with_tiebreak_keys(node_count_, std::move(specs), std::move(keys));
}

void WeightedGraph::check_node(NodeId x) const {
  if (x >= node_count_) {
    throw UsageError("node " + std::to_string(x) + " out of range");
  }
}

void WeightedGraph::check_edge(EdgeId e) const {
  if (e >= edges_.size()) {
    throw UsageError("edge " + std::to_string(e) + " out of range");
  }
}

namespace {

EdgeMask checked_mask(const WeightedGraph& g, const FaultSet& excluded) {
  return excluded.to_mask(g.edge_count());
}

void check_mask(const WeightedGraph& g, const EdgeMask& removed) {
  if (removed.size() != g.edge_count()) {
    throw UsageError("edge mask size does not match graph");
  }
}

struct Label {
  double dist;
  long hops;
  NodeId node;
  friend bool operator>(const Label& a, const Label& b) {
    return std::tie(a.dist, a.hops, a.node) > std::tie(b.dist, b.hops, b.node);
  }
};

// Dijkstra on the lexicographic key (weight, hops). Stops once t is settled or
// the frontier exceeds bound. parent_edge is filled for settled nodes.
void dijkstra(const WeightedGraph& g, NodeId s, std::optional<NodeId> t,
              const EdgeMask& removed, double bound, std::vector<double>& dist,
              std::vector<long>& hops, std::vector<EdgeId>* parent_edge) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::size_t n = g.node_count();
  dist.assign(n, kInf);
  hops.assign(n, std::numeric_limits<long>::max());
  if (parent_edge) {
    parent_edge->assign(n, std::numeric_limits<EdgeId>::max());
  }
  std::vector<char> settled(n, 0);
  std::priority_queue<Label, std::vector<Label>, std::greater<>> queue;
  dist[s] = 0;
  hops[s] = 0;
  queue.push({0.0, 0, s});
  while (!queue.empty()) {
    Label top = queue.top();
    queue.pop();
    if (settled[top.node]) continue;
    settled[top.node] = 1;
    if (t && top.node == *t) return;
    for (const Incidence& inc : g.incident(top.node)) {
      if (removed.contains(inc.edge)) continue;
      const double nd = top.dist + g.edge(inc.edge).weight;
      const long nh = top.hops + 1;
      if (nd > bound) continue;
      if (std::tie(nd, nh) < std::tie(dist[inc.neighbor], hops[inc.neighbor])) {
        dist[inc.neighbor] = nd;
        hops[inc.neighbor] = nh;
        if (parent_edge) (*parent_edge)[inc.neighbor] = inc.edge;
        queue.push({nd, nh, inc.neighbor});
      }
    }
  }
}

// BFS from s over non-removed edges. Returns hop distances (-1 = unreached).
std::vector<long> bfs(const WeightedGraph& g, NodeId s, const EdgeMask& removed,
                      long max_hops, std::vector<EdgeId>* parent_edge) {
  std::vector<long> depth(g.node_count(), -1);
  if (parent_edge) {
    parent_edge->assign(g.node_count(), std::numeric_limits<EdgeId>::max());
  }
  std::deque<NodeId> queue{s};
  depth[s] = 0;
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    if (depth[x] >= max_hops) continue;
    for (const Incidence& inc : g.incident(x)) {
      if (removed.contains(inc.edge) || depth[inc.neighbor] >= 0) continue;
      depth[inc.neighbor] = depth[x] + 1;
      if (parent_edge) (*parent_edge)[inc.neighbor] = inc.edge;
      queue.push_back(inc.neighbor);
    }
  }
  return depth;
}

std::vector<EdgeId> unwind(const WeightedGraph& g, NodeId s, NodeId t,
                           const std::vector<EdgeId>& parent_edge) {
  std::vector<EdgeId> path;
  for (NodeId x = t; x != s;) {
    EdgeId e = parent_edge[x];
    path.push_back(e);
    x = g.edge(e).other(x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Distance weighted_distance(const WeightedGraph& g, NodeId s, NodeId t,
                           const FaultSet& excluded) {
  return weighted_distance(g, s, t, checked_mask(g, excluded));
}

Distance weighted_distance(const WeightedGraph& g, NodeId s, NodeId t,
                           const EdgeMask& removed) {
  g.check_node(s);
  g.check_node(t);
  check_mask(g, removed);
  std::vector<double> dist;
  std::vector<long> hops;
  dijkstra(g, s, t, removed, std::numeric_limits<double>::infinity(), dist,
           hops, nullptr);
  if (std::isinf(dist[t])) return Distance::infinite();
  return dist[t];
}

HopCount hop_distance(const WeightedGraph& g, NodeId s, NodeId t,
                      const FaultSet& excluded) {
  return hop_distance(g, s, t, checked_mask(g, excluded));
}

HopCount hop_distance(const WeightedGraph& g, NodeId s, NodeId t,
                      const EdgeMask& removed) {
  g.check_node(s);
  g.check_node(t);
  check_mask(g, removed);
  auto depth = bfs(g, s, removed, std::numeric_limits<long>::max(), nullptr);
  if (depth[t] < 0) return HopCount::infinite();
  return depth[t];
}

std::vector<Distance> weighted_distances_from(const WeightedGraph& g, NodeId s,
                                              const EdgeMask& removed) {
  g.check_node(s);
  check_mask(g, removed);
  std::vector<double> dist;
  std::vector<long> hops;
  dijkstra(g, s, std::nullopt, removed,
           std::numeric_limits<double>::infinity(), dist, hops, nullptr);
  std::vector<Distance> out;
  out.reserve(dist.size());
  for (double d : dist) {
    out.push_back(std::isinf(d) ? Distance::infinite() : Distance(d));
  }
  return out;
}

std::optional<std::vector<EdgeId>> shortest_path_within(
    const WeightedGraph& g, NodeId s, NodeId t, const EdgeMask& removed,
    double bound) {
  g.check_node(s);
  g.check_node(t);
  check_mask(g, removed);
  if (s == t) return std::vector<EdgeId>{};
  std::vector<double> dist;
  std::vector<long> hops;
  std::vector<EdgeId> parent;
  dijkstra(g, s, t, removed, bound, dist, hops, &parent);
  if (std::isinf(dist[t])) return std::nullopt;
  return unwind(g, s, t, parent);
}

std::optional<std::vector<EdgeId>> shortest_hop_path_within(
    const WeightedGraph& g, NodeId s, NodeId t, const EdgeMask& removed,
    long max_hops) {
  g.check_node(s);
  g.check_node(t);
  check_mask(g, removed);
  if (s == t) return std::vector<EdgeId>{};
  std::vector<EdgeId> parent;
  auto depth = bfs(g, s, removed, max_hops, &parent);
  if (depth[t] < 0) return std::nullopt;
  return unwind(g, s, t, parent);
}

HopCount girth(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  long best = std::numeric_limits<long>::max();
  std::vector<long> depth(n);
  std::vector<EdgeId> via(n);
  for (NodeId root = 0; root < n; ++root) {
    std::fill(depth.begin(), depth.end(), -1);
    std::deque<NodeId> queue{root};
    depth[root] = 0;
    via[root] = std::numeric_limits<EdgeId>::max();
    while (!queue.empty()) {
      NodeId x = queue.front();
      queue.pop_front();
      // Any cycle closed from here or later has at least 2*depth edges.
      if (2 * depth[x] >= best) break;
      for (const Incidence& inc : g.incident(x)) {
        if (inc.edge == via[x]) continue;
        if (depth[inc.neighbor] < 0) {
          depth[inc.neighbor] = depth[x] + 1;
          via[inc.neighbor] = inc.edge;
          queue.push_back(inc.neighbor);
        } else {
          best = std::min(best, depth[x] + depth[inc.neighbor] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<long>::max()) return HopCount::infinite();
  return best;
}

namespace {

class CycleWalker {
 public:
  CycleWalker(const WeightedGraph& g, std::size_t max_len,
              const std::function<bool(const Cycle&)>& visit)
      : g_(g), max_len_(max_len), visit_(visit), on_path_(g.node_count(), 0),
        to_start_(g.node_count(), -1) {}

  bool run() {
    for (NodeId s = 0; s < g_.node_count(); ++s) {
      start_ = s;
      distances_to_start();
      cycle_.nodes = {s};
      cycle_.edges.clear();
      on_path_[s] = 1;
      bool keep_going = extend(s);
      on_path_[s] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

 private:
  // Hop distances to start_ using only nodes >= start_, for pruning.
  void distances_to_start() {
    std::fill(to_start_.begin(), to_start_.end(), -1);
    std::deque<NodeId> queue{start_};
    to_start_[start_] = 0;
    while (!queue.empty()) {
      NodeId x = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g_.incident(x)) {
        if (inc.neighbor < start_ || to_start_[inc.neighbor] >= 0) continue;
        to_start_[inc.neighbor] = to_start_[x] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }

  bool extend(NodeId x) {
    const std::size_t len = cycle_.edges.size();
    for (const Incidence& inc : g_.incident(x)) {
      const NodeId y = inc.neighbor;
      if (y == start_) {
        // Close the cycle; keep only one of the two traversal directions.
        if (len >= 2 && len + 1 <= max_len_ && cycle_.nodes[1] < x) {
          cycle_.edges.push_back(inc.edge);
          bool keep_going = visit_(cycle_);
          cycle_.edges.pop_back();
          if (!keep_going) return false;
        }
        continue;
      }
      if (y < start_ || on_path_[y] || to_start_[y] < 0) continue;
      if (len + 1 + static_cast<std::size_t>(to_start_[y]) > max_len_) continue;
      on_path_[y] = 1;
      cycle_.nodes.push_back(y);
      cycle_.edges.push_back(inc.edge);
      bool keep_going = extend(y);
      cycle_.edges.pop_back();
      cycle_.nodes.pop_back();
      on_path_[y] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

  const WeightedGraph& g_;
  std::size_t max_len_;
  const std::function<bool(const Cycle&)>& visit_;
  std::vector<char> on_path_;
  std::vector<long> to_start_;
  NodeId start_ = 0;
  Cycle cycle_;
};

}  // namespace

bool for_each_cycle(const WeightedGraph& g, std::size_t max_len,
                    const std::function<bool(const Cycle&)>& visit) {
  if (max_len < 3) return true;
  return CycleWalker(g, max_len, visit).run();
}

std::vector<Cycle> enumerate_cycles(const WeightedGraph& g,
                                    std::size_t max_len) {
  std::vector<Cycle> out;
  for_each_cycle(g, max_len, [&](const Cycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace ftspan
