#include "ftspan/eft_verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "ftspan/errors.hpp"
#include "ftspan/graph_io.hpp"

namespace ftspan {

namespace {

// For each edge of h, the id of the same edge in g.
std::vector<EdgeId> embed(const WeightedGraph& g, const WeightedGraph& h) {
  if (g.node_count() != h.node_count()) {
    throw UsageError("spanner and graph have different node counts");
  }
  std::vector<EdgeId> image;
  image.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    auto id = g.find_edge(e.u, e.v);
    if (!id || g.edge(*id).weight != e.weight) {
      throw UsageError("spanner edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") is not an edge of the graph");
    }
    image.push_back(*id);
  }
  return image;
}

class StretchChecker {
 public:
  StretchChecker(const WeightedGraph& g, const WeightedGraph& h,
                 const std::vector<EdgeId>& image, double stretch)
      : g_(g), h_(h), image_(image), stretch_(stretch) {}

  // First violating pair (u < v, lexicographic) under the given faults.
  std::optional<Violation> check(const std::vector<EdgeId>& faults) const {
    EdgeMask g_removed(g_.edge_count());
    for (EdgeId e : faults) g_removed.insert(e);
    EdgeMask h_removed(h_.edge_count());
    for (EdgeId e = 0; e < h_.edge_count(); ++e) {
      if (g_removed.contains(image_[e])) h_removed.insert(e);
    }
    for (NodeId u = 0; u < g_.node_count(); ++u) {
      auto dg = weighted_distances_from(g_, u, g_removed);
      auto dh = weighted_distances_from(h_, u, h_removed);
      for (NodeId v = u + 1; v < g_.node_count(); ++v) {
        if (!(dh[v] <= stretch_ * dg[v])) {
          return Violation{FaultSet(faults), u, v, dh[v], dg[v]};
        }
      }
    }
    return std::nullopt;
  }

 private:
  const WeightedGraph& g_;
  const WeightedGraph& h_;
  const std::vector<EdgeId>& image_;
  double stretch_;
};

// Visits all subsets of {0..m-1} of size 0..f in order of size, then
// lexicographically. visit(index, subset) returns false to stop.
template <typename Visit>
void for_each_subset(std::size_t m, std::size_t f, Visit&& visit) {
  std::size_t index = 0;
  std::vector<EdgeId> subset;
  for (std::size_t size = 0; size <= std::min(f, m); ++size) {
    subset.resize(size);
    std::iota(subset.begin(), subset.end(), 0);
    for (;;) {
      if (!visit(index++, subset)) return;
      // Advance to the next combination.
      std::size_t i = size;
      while (i > 0 && subset[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
}

}  // namespace

double fault_set_count(std::size_t m, std::size_t f) {
  double total = 0;
  double binom = 1;
  for (std::size_t i = 0; i <= std::min(f, m); ++i) {
    total += binom;
    binom = binom * static_cast<double>(m - i) / static_cast<double>(i + 1);
  }
  return total;
}

EftVerdict verify_eft(const WeightedGraph& g, const WeightedGraph& h,
                      std::size_t f, std::size_t k, VerifyOptions options) {
  if (k == 0) throw UsageError("k must be positive");
  const auto image = embed(g, h);
  const StretchChecker checker(g, h, image, static_cast<double>(2 * k - 1));
  EftVerdict verdict;

  if (options.mode == VerifyMode::sampled) {
    std::mt19937_64 rng(options.seed);
    std::vector<EdgeId> all(g.edge_count());
    std::iota(all.begin(), all.end(), 0);
    const std::size_t size = std::min(f, g.edge_count());
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
      std::vector<EdgeId> faults;
      std::sample(all.begin(), all.end(), std::back_inserter(faults), size, rng);
      ++verdict.fault_sets_checked;
      if (auto v = checker.check(faults)) {
        verdict.ok = false;
        verdict.violation = std::move(v);
        break;
      }
    }
    return verdict;
  }

  const double n = static_cast<double>(g.node_count());
  const double work = fault_set_count(g.edge_count(), f) * n * n;
  if (!options.force && work > options.budget) {
    throw BudgetExceeded("exhaustive EFT verification needs ~" +
                         std::to_string(work) + " distance checks (budget " +
                         std::to_string(options.budget) + ")");
  }

  std::size_t workers = options.threads != 0
                            ? options.threads
                            : std::max(1u, std::thread::hardware_concurrency());
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> first_bad{kNone};
  std::atomic<std::size_t> checked{0};
  std::mutex mu;
  std::optional<Violation> found;

  // Worker w takes every subset whose index is congruent to w; the reported
  // violation is the one with the smallest index.
  auto run = [&](std::size_t w) {
    std::size_t mine = 0;
    for_each_subset(g.edge_count(), f,
                    [&](std::size_t index, const std::vector<EdgeId>& subset) {
                      if (index > first_bad.load()) return false;
                      if (index % workers != w) return true;
                      ++mine;
                      if (auto v = checker.check(subset)) {
                        std::lock_guard lock(mu);
                        if (index < first_bad.load()) {
                          first_bad = index;
                          found = std::move(v);
                        }
                        return false;
                      }
                      return true;
                    });
    checked += mine;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  verdict.fault_sets_checked = checked.load();
  if (found) {
    verdict.ok = false;
    verdict.violation = std::move(found);
  }
  return verdict;
}

std::string format_violation(const Violation& v) {
  std::ostringstream out;
  out << "FAULTS=";
  bool first = true;
  for (EdgeId e : v.faults) {
    out << (first ? "" : ",") << e;
    first = false;
  }
  auto show = [](const Distance& d) {
    return d.is_infinite() ? std::string("inf") : format_weight(d.value());
  };
  out << " PAIR=" << v.u << ',' << v.v << " DH=" << show(v.in_spanner)
      << " DG=" << show(v.in_graph);
  return out.str();
}

}  // namespace ftspan
