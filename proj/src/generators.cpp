#include "ftspan/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ftspan/errors.hpp"

namespace ftspan {

namespace {

double parse_double(std::string_view s) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("bad number '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

WeightMode parse_weight_mode(std::string_view text) {
  if (text == "unit") return WeightMode::unit();
  constexpr std::string_view prefix = "uniform:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto rest = text.substr(prefix.size());
    auto comma = rest.find(',');
    if (comma != std::string_view::npos) {
      double lo = parse_double(rest.substr(0, comma));
      double hi = parse_double(rest.substr(comma + 1));
      if (lo < 0 || hi < lo) throw UsageError("need 0 <= lo <= hi");
      return WeightMode::uniform(lo, hi);
    }
  }
  throw UsageError("weight mode must be 'unit' or 'uniform:<lo>,<hi>'");
}

WeightedGraph gen_random(std::size_t n, std::size_t m, WeightMode weights,
                         std::uint64_t seed) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > pairs) {
    throw UsageError("cannot place " + std::to_string(m) +
                     " edges on " + std::to_string(n) + " nodes");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<NodeId, NodeId>> chosen;
  chosen.reserve(m);
  if (pairs <= 4'000'000) {
    // Partial Fisher-Yates over the list of all pairs.
    std::vector<std::pair<NodeId, NodeId>> all;
    all.reserve(pairs);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) all.emplace_back(u, v);
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pairs - 1);
      std::swap(all[i], all[pick(rng)]);
      chosen.push_back(all[i]);
    }
  } else {
    std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
    std::set<std::pair<NodeId, NodeId>> seen;
    while (chosen.size() < m) {
      NodeId a = node(rng), b = node(rng);
      if (a == b) continue;
      auto key = std::minmax(a, b);
      if (seen.insert(key).second) chosen.emplace_back(key.first, key.second);
    }
  }
  std::uniform_real_distribution<double> weight(weights.lo, weights.hi);
  std::vector<EdgeSpec> edges;
  edges.reserve(m);
  for (auto [u, v] : chosen) {
    const double w =
        weights.kind == WeightMode::Kind::unit ? 1.0 : weight(rng);
    edges.push_back({u, v, w});
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph gen_regular(std::size_t n, std::size_t r, std::uint64_t seed) {
  if ((n * r) % 2 != 0) throw UsageError("n * r must be even");
  if (r > 0 && r >= n) throw UsageError("degree r must be below n");
  std::mt19937_64 rng(seed);
  std::vector<NodeId> stubs;
  for (NodeId x = 0; x < n; ++x) stubs.insert(stubs.end(), r, x);

  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<NodeId, NodeId>> seen;
    std::vector<EdgeSpec> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      auto [a, b] = std::minmax(stubs[i], stubs[i + 1]);
      if (a == b || !seen.emplace(a, b).second) {
        ok = false;
        break;
      }
      edges.push_back({a, b, 1.0});
    }
    if (ok) return WeightedGraph(n, std::move(edges));
  }
  throw UsageError("pairing model failed to produce a simple " +
                   std::to_string(r) + "-regular graph on " +
                   std::to_string(n) + " nodes");
}

WeightedGraph blow_up(const WeightedGraph& g, std::size_t left_count,
                      std::size_t copies_left, std::size_t copies_right) {
  if (copies_left == 0 || copies_right == 0) {
    throw UsageError("copy multiplicities must be positive");
  }
  if (left_count > g.node_count()) {
    throw UsageError("left side larger than the graph");
  }
  const std::size_t right_count = g.node_count() - left_count;
  const std::size_t right_base = left_count * copies_left;
  std::vector<EdgeSpec> edges;
  edges.reserve(g.edge_count() * copies_left * copies_right);
  for (const Edge& e : g.edges()) {
    // Edge endpoints are stored sorted, so u is the left one if any.
    if (!(e.u < left_count && e.v >= left_count)) {
      throw UsageError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") does not cross the bipartition");
    }
    for (std::size_t i = 0; i < copies_left; ++i) {
      for (std::size_t j = 0; j < copies_right; ++j) {
        edges.push_back(
            {static_cast<NodeId>(e.u * copies_left + i),
             static_cast<NodeId>(right_base + (e.v - left_count) * copies_right + j),
             e.weight});
      }
    }
  }
  return WeightedGraph(right_base + right_count * copies_right,
                       std::move(edges));
}

WeightedGraph cycle_graph(std::size_t n, double weight) {
  std::vector<EdgeSpec> edges;
  for (NodeId x = 0; x < n; ++x) {
    edges.push_back({x, static_cast<NodeId>((x + 1) % n), weight});
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph complete_graph(std::size_t n, double weight) {
  std::vector<EdgeSpec> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v, weight});
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph petersen_graph() {
  std::vector<EdgeSpec> edges;
  for (NodeId i = 0; i < 5; ++i) {
    edges.push_back({i, static_cast<NodeId>((i + 1) % 5)});          // outer
    edges.push_back({i, static_cast<NodeId>(i + 5)});                // spoke
    edges.push_back({static_cast<NodeId>(i + 5),
                     static_cast<NodeId>((i + 2) % 5 + 5)});         // inner
  }
  return WeightedGraph(10, std::move(edges));
}

}  // namespace ftspan
