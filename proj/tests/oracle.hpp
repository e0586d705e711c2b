#pragma once

// Brute-force reference implementations. Deliberately naive: adjacency
// matrices, Floyd-Warshall, and explicit subset enumeration. They share no
// code with the library beyond the WeightedGraph container.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "ftspan/blocking_sets.hpp"
#include "ftspan/graph.hpp"

namespace oracle {

using ftspan::EdgeId;
using ftspan::NodeId;
using ftspan::WeightedGraph;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

using Matrix = std::vector<std::vector<double>>;

// All-pairs distances over the edges not in `removed`. hops=true uses unit
// lengths.
inline Matrix all_pairs(const WeightedGraph& g, const std::set<EdgeId>& removed,
                        bool hops = false) {
  const std::size_t n = g.node_count();
  Matrix d(n, std::vector<double>(n, kInf));
  for (std::size_t x = 0; x < n; ++x) d[x][x] = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (removed.count(e)) continue;
    const auto& edge = g.edge(e);
    const double w = hops ? 1.0 : edge.weight;
    d[edge.u][edge.v] = std::min(d[edge.u][edge.v], w);
    d[edge.v][edge.u] = std::min(d[edge.v][edge.u], w);
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (d[a][m] + d[m][b] < d[a][b]) d[a][b] = d[a][m] + d[m][b];
  return d;
}

// Calls visit(subset) for every subset of `pool` with at most f elements;
// stops when visit returns true. Returns whether it stopped.
inline bool any_subset(const std::vector<EdgeId>& pool, std::size_t f,
                       const std::function<bool(const std::set<EdgeId>&)>& visit) {
  std::set<EdgeId> current;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (visit(current)) return true;
    if (current.size() == f) return false;
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.insert(pool[i]);
      if (rec(i + 1)) return true;
      current.erase(pool[i]);
    }
    return false;
  };
  return rec(0);
}

// Exists F among present edges other than (u,v), |F| <= f, with
// dist(u,v) > threshold? `absent` edges are not part of the graph.
inline bool fault_decision(const WeightedGraph& h, const std::set<EdgeId>& absent,
                           NodeId u, NodeId v, std::size_t f, double threshold,
                           bool hops = false, std::set<EdgeId>* witness = nullptr) {
  std::vector<EdgeId> pool;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (absent.count(e) || h.edge(e).has_endpoint(u) && h.edge(e).has_endpoint(v))
      continue;
    pool.push_back(e);
  }
  return any_subset(pool, f, [&](const std::set<EdgeId>& faults) {
    std::set<EdgeId> removed = absent;
    removed.insert(faults.begin(), faults.end());
    if (all_pairs(h, removed, hops)[u][v] > threshold) {
      if (witness) *witness = faults;
      return true;
    }
    return false;
  });
}

// Smallest number of edges (excluding a direct u-v edge) whose removal leaves
// no u-v path of at most max_hops edges; returns limit+1 if above limit.
inline std::size_t min_hop_cut(const WeightedGraph& h, NodeId u, NodeId v,
                               std::size_t max_hops, std::size_t limit) {
  for (std::size_t size = 0; size <= limit; ++size) {
    if (fault_decision(h, {}, u, v, size, static_cast<double>(max_hops), true))
      return size;
  }
  return limit + 1;
}

// Direct transcription of the fault-tolerant greedy with the brute-force
// decision. Returns the kept edges as input ids.
inline std::vector<EdgeId> ft_greedy(const WeightedGraph& g, std::size_t f,
                                     std::size_t k) {
  // Input ids are already canonical order.
  std::set<EdgeId> absent;
  for (EdgeId e = 0; e < g.edge_count(); ++e) absent.insert(e);
  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    if (fault_decision(g, absent, edge.u, edge.v, f,
                       static_cast<double>(2 * k - 1) * edge.weight)) {
      kept.push_back(e);
      absent.erase(e);
    }
  }
  return kept;
}

// Naive EFT check; h_edges are ids of g forming the spanner.
inline bool is_eft_spanner(const WeightedGraph& g, const std::vector<EdgeId>& h_edges,
                           std::size_t f, std::size_t k) {
  std::set<EdgeId> not_in_h;
  for (EdgeId e = 0; e < g.edge_count(); ++e) not_in_h.insert(e);
  for (EdgeId e : h_edges) not_in_h.erase(e);
  std::vector<EdgeId> pool(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) pool[e] = e;
  const double t = static_cast<double>(2 * k - 1);
  const bool bad = any_subset(pool, f, [&](const std::set<EdgeId>& faults) {
    auto dg = all_pairs(g, faults);
    std::set<EdgeId> removed = faults;
    removed.insert(not_in_h.begin(), not_in_h.end());
    auto dh = all_pairs(g, removed);
    for (std::size_t a = 0; a < g.node_count(); ++a)
      for (std::size_t b = a + 1; b < g.node_count(); ++b)
        if (dg[a][b] < kInf && dh[a][b] > t * dg[a][b]) return true;
    return false;
  });
  return !bad;
}

// Cycles as edge sets: every subset of at most max_len edges in which each
// touched node has degree 2 and the edges are connected.
inline std::vector<std::vector<EdgeId>> cycles(const WeightedGraph& g,
                                               std::size_t max_len) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> current;
  auto is_cycle = [&] {
    if (current.size() < 3) return false;
    std::vector<int> deg(g.node_count(), 0);
    for (EdgeId e : current) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    for (int d : deg)
      if (d != 0 && d != 2) return false;
    // Connectivity by repeated relaxation.
    std::vector<bool> seen(g.node_count(), false);
    seen[g.edge(current[0]).u] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (EdgeId e : current) {
        const auto& edge = g.edge(e);
        if (seen[edge.u] != seen[edge.v]) {
          seen[edge.u] = seen[edge.v] = true;
          grew = true;
        }
      }
    }
    for (EdgeId e : current)
      if (!seen[g.edge(e).u]) return false;
    return true;
  };
  std::function<void(EdgeId)> rec = [&](EdgeId from) {
    if (is_cycle()) out.push_back(current);
    if (current.size() == max_len) return;
    for (EdgeId e = from; e < g.edge_count(); ++e) {
      current.push_back(e);
      rec(e + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

inline bool strongly_blocks(const WeightedGraph& h, const ftspan::StrongBlockingSet& b,
                            std::size_t t) {
  for (const auto& c : cycles(h, t)) {
    const EdgeId heaviest = *std::max_element(c.begin(), c.end());
    bool hit = false;
    for (const auto& block : b) {
      const bool in1 = std::count(c.begin(), c.end(), block.first) > 0;
      const bool in2 = std::count(c.begin(), c.end(), block.second) > 0;
      if (in1 && in2 && (block.first == heaviest || block.second == heaviest))
        hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

// Shortest cycle length by edge deletion: 1 + dist(u, v) without (u, v).
inline double girth(const WeightedGraph& g) {
  double best = kInf;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto d = all_pairs(g, {e}, true);
    best = std::min(best, 1 + d[g.edge(e).u][g.edge(e).v]);
  }
  return best;
}

struct Walk {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
};

// Every edge-simple oriented walk with exactly j edges.
inline std::vector<Walk> trails(const WeightedGraph& g, std::size_t j) {
  std::vector<Walk> out;
  Walk w;
  std::function<void()> rec = [&] {
    if (w.edges.size() == j) {
      out.push_back(w);
      return;
    }
    const NodeId at = w.nodes.back();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edge(e);
      if (!edge.has_endpoint(at)) continue;
      if (std::count(w.edges.begin(), w.edges.end(), e)) continue;
      w.edges.push_back(e);
      w.nodes.push_back(edge.u == at ? edge.v : edge.u);
      rec();
      w.edges.pop_back();
      w.nodes.pop_back();
    }
  };
  for (NodeId s = 0; s < g.node_count(); ++s) {
    w.nodes = {s};
    rec();
  }
  return out;
}

inline bool node_simple(const Walk& w) {
  std::set<NodeId> s(w.nodes.begin(), w.nodes.end());
  return s.size() == w.nodes.size();
}

// Position p (1-based) even: heavier than positions p-1 and p+1.
inline bool alternating(const std::vector<EdgeId>& e) {
  for (std::size_t p = 2; p <= e.size(); p += 2) {
    if (!(e[p - 1] > e[p - 2])) return false;
    if (p < e.size() && !(e[p - 1] > e[p])) return false;
  }
  return true;
}

inline bool blocked(const std::vector<EdgeId>& e, const ftspan::StrongBlockingSet& b) {
  for (const auto& block : b) {
    if (std::count(e.begin(), e.end(), block.first) &&
        std::count(e.begin(), e.end(), block.second))
      return true;
  }
  return false;
}

}  // namespace oracle
