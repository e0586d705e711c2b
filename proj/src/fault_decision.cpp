#include "ftspan/fault_decision.hpp"

#include <cmath>
#include <optional>
#include <vector>

#include "ftspan/errors.hpp"

namespace ftspan {

namespace {

void check_pair(const WeightedGraph& h, const EdgeMask& absent, NodeId u,
                NodeId v) {
  h.check_node(u);
  h.check_node(v);
  if (u == v) throw UsageError("fault decision needs distinct endpoints");
  if (absent.size() != h.edge_count()) {
    throw UsageError("edge mask size does not match graph");
  }
}

class BranchAndBound {
 public:
  BranchAndBound(const WeightedGraph& h, const EdgeMask& absent, NodeId u,
                 NodeId v, double threshold, Metric metric)
      : h_(h), removed_(absent), frozen_(h.edge_count()), u_(u), v_(v),
        threshold_(threshold), metric_(metric) {
    // The queried edge itself can never be faulted.
    if (auto direct = h.find_edge(u, v)) frozen_.insert(*direct);
  }

  FaultDecision run(std::size_t f) {
    FaultDecision result;
    result.yes = search(f);
    result.branches = branches_;
    if (result.yes) result.witness = FaultSet(chosen_);
    return result;
  }

 private:
  std::optional<std::vector<EdgeId>> violating_path() const {
    if (metric_ == Metric::hops) {
      return shortest_hop_path_within(h_, u_, v_, removed_,
                                      static_cast<long>(std::floor(threshold_)));
    }
    return shortest_path_within(h_, u_, v_, removed_, threshold_);
  }

  bool search(std::size_t budget) {
    ++branches_;
    auto path = violating_path();
    if (!path) return true;
    if (budget == 0) return false;
    std::vector<EdgeId> newly_frozen;
    bool found = false;
    for (EdgeId e : *path) {
      if (frozen_.contains(e)) continue;
      removed_.insert(e);
      chosen_.push_back(e);
      found = search(budget - 1);
      if (found) break;
      chosen_.pop_back();
      removed_.erase(e);
      frozen_.insert(e);
      newly_frozen.push_back(e);
    }
    for (EdgeId e : newly_frozen) frozen_.erase(e);
    return found;
  }

  const WeightedGraph& h_;
  EdgeMask removed_;
  EdgeMask frozen_;
  NodeId u_;
  NodeId v_;
  double threshold_;
  Metric metric_;
  std::vector<EdgeId> chosen_;
  std::size_t branches_ = 0;
};

}  // namespace

FaultDecision exact_fault_decision(const WeightedGraph& h, NodeId u, NodeId v,
                                   std::size_t f, double threshold,
                                   Metric metric) {
  return exact_fault_decision(h, EdgeMask(h.edge_count()), u, v, f, threshold,
                              metric);
}

FaultDecision exact_fault_decision(const WeightedGraph& h,
                                   const EdgeMask& absent, NodeId u, NodeId v,
                                   std::size_t f, double threshold,
                                   Metric metric) {
  check_pair(h, absent, u, v);
  if (!(threshold >= 0)) throw UsageError("threshold must be non-negative");
  BranchAndBound search(h, absent, u, v, threshold, metric);
  return search.run(f);
}

ApproxDecision approx_fault_decision(const WeightedGraph& h, NodeId u, NodeId v,
                                     std::size_t f, std::size_t k) {
  return approx_fault_decision(h, EdgeMask(h.edge_count()), u, v, f, k);
}

ApproxDecision approx_fault_decision(const WeightedGraph& h,
                                     const EdgeMask& absent, NodeId u, NodeId v,
                                     std::size_t f, std::size_t k) {
  check_pair(h, absent, u, v);
  if (k == 0) throw UsageError("k must be positive");
  ApproxDecision result;
  // A present (u,v) edge is a 1-hop path no admissible cut may contain.
  if (auto direct = h.find_edge(u, v); direct && !absent.contains(*direct)) {
    return result;
  }
  const long max_hops = static_cast<long>(2 * k - 1);
  EdgeMask removed = absent;
  std::vector<EdgeId> cover;
  for (;;) {
    auto path = shortest_hop_path_within(h, u, v, removed, max_hops);
    if (!path) {
      result.yes = true;
      break;
    }
    if (result.iterations == f) break;
    ++result.iterations;
    for (EdgeId e : *path) {
      removed.insert(e);
      cover.push_back(e);
    }
  }
  result.cover = FaultSet(std::move(cover));
  return result;
}

}  // namespace ftspan
