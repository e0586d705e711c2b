#include "ftspan/path_census.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <string>

#include "ftspan/errors.hpp"

namespace ftspan {

namespace {

// Consecutive edges at 1-based positions (i-1, i): the even-position one must
// be the heavier.
bool alternation_holds(EdgeId previous, EdgeId next, std::size_t next_pos) {
  return next_pos % 2 == 0 ? next > previous : previous > next;
}

// Depth-first enumeration of edge-simple walks from one source. visit() sees
// every prefix, including the empty one, and returns false to stop descending.
class TrailWalker {
 public:
  struct Options {
    std::size_t max_len = 0;
    bool simple_only = false;
    bool alternating_only = false;
    bool unblocked_only = false;
  };

  TrailWalker(const WeightedGraph& g, const StrongBlockingSet* b,
              Options options)
      : g_(g), b_(b), options_(options), edge_used_(g.edge_count(), 0),
        node_visits_(g.node_count(), 0) {}

  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  bool simple() const { return repeated_nodes_ == 0; }
  bool alternating() const { return alternation_breaks_ == 0; }
  bool unblocked() const { return blocked_pairs_ == 0; }

  template <typename Visit>
  void walk(NodeId s, Visit&& visit) {
    nodes_.assign(1, s);
    edges_.clear();
    node_visits_[s] = 1;
    descend(visit);
    node_visits_[s] = 0;
  }

 private:
  template <typename Visit>
  void descend(Visit& visit) {
    if (!visit(*this)) return;
    if (edges_.size() == options_.max_len) return;
    const std::size_t pos = edges_.size() + 1;
    const NodeId x = nodes_.back();
    for (const Incidence& inc : g_.incident(x)) {
      const EdgeId e = inc.edge;
      if (edge_used_[e]) continue;
      const bool repeats = node_visits_[inc.neighbor] > 0;
      if (repeats && options_.simple_only) continue;
      const bool breaks = pos > 1 && !alternation_holds(edges_.back(), e, pos);
      if (breaks && options_.alternating_only) continue;
      std::size_t newly_blocked = 0;
      if (b_) {
        for (EdgeId p : b_->partners(e)) {
          if (edge_used_[p]) ++newly_blocked;
        }
      }
      if (newly_blocked > 0 && options_.unblocked_only) continue;

      edge_used_[e] = 1;
      ++node_visits_[inc.neighbor];
      repeated_nodes_ += repeats ? 1 : 0;
      alternation_breaks_ += breaks ? 1 : 0;
      blocked_pairs_ += newly_blocked;
      nodes_.push_back(inc.neighbor);
      edges_.push_back(e);

      descend(visit);

      edges_.pop_back();
      nodes_.pop_back();
      blocked_pairs_ -= newly_blocked;
      alternation_breaks_ -= breaks ? 1 : 0;
      repeated_nodes_ -= repeats ? 1 : 0;
      --node_visits_[inc.neighbor];
      edge_used_[e] = 0;
    }
  }

  const WeightedGraph& g_;
  const StrongBlockingSet* b_;
  Options options_;
  std::vector<std::uint8_t> edge_used_;
  std::vector<std::uint32_t> node_visits_;
  std::vector<NodeId> nodes_;
  std::vector<EdgeId> edges_;
  std::size_t repeated_nodes_ = 0;
  std::size_t alternation_breaks_ = 0;
  std::size_t blocked_pairs_ = 0;
};

void check_limits(const WeightedGraph& g, std::size_t len,
                  const CensusLimits& limits) {
  if (limits.force) return;
  if (g.node_count() > limits.max_nodes || len > limits.max_length) {
    throw BudgetExceeded(
        "exhaustive path enumeration limited to n <= " +
        std::to_string(limits.max_nodes) + " and length <= " +
        std::to_string(limits.max_length) + " (got n = " +
        std::to_string(g.node_count()) + ", length " + std::to_string(len) +
        "); pass force to override");
  }
}

void check_host(const WeightedGraph& g, const StrongBlockingSet& b) {
  if (b.host_edge_count() != g.edge_count()) {
    throw UsageError("blocking set was built for a different host graph");
  }
}

std::optional<PathRecord> search_alternating(const WeightedGraph& g,
                                             std::size_t k) {
  TrailWalker walker(g, nullptr, {k, false, true, false});
  std::optional<PathRecord> found;
  for (NodeId s = 0; s < g.node_count() && !found; ++s) {
    walker.walk(s, [&](const TrailWalker& w) {
      if (found) return false;
      if (w.edges().size() == k) {
        found = make_path(g, s, w.edges());
        return false;
      }
      return true;
    });
  }
  return found;
}

struct Peeled {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
};

std::optional<Peeled> peel(const WeightedGraph& g, const EdgeMask& active,
                           std::size_t k) {
  if (k == 1) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (active.contains(e)) {
        return Peeled{{g.edge(e).u, g.edge(e).v}, {e}};
      }
    }
    return std::nullopt;
  }
  // Odd k strips each node's lightest edge, even k its heaviest.
  const bool strip_lightest = k % 2 == 1;
  constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();
  std::vector<EdgeId> stripped(g.node_count(), kNone);
  EdgeMask rest = active;
  for (NodeId x = 0; x < g.node_count(); ++x) {
    for (const Incidence& inc : g.incident(x)) {
      if (!active.contains(inc.edge)) continue;
      EdgeId& pick = stripped[x];
      if (pick == kNone || (strip_lightest ? inc.edge < pick : inc.edge > pick)) {
        pick = inc.edge;
      }
    }
    if (stripped[x] != kNone) rest.erase(stripped[x]);
  }
  auto shorter = peel(g, rest, k - 1);
  if (!shorter) return std::nullopt;
  const NodeId end = shorter->nodes.back();
  const EdgeId extension = stripped[end];
  if (extension == kNone) return std::nullopt;
  shorter->edges.push_back(extension);
  shorter->nodes.push_back(g.edge(extension).other(end));
  return shorter;
}

}  // namespace

bool is_alternating(std::span<const EdgeId> edges) {
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (!alternation_holds(edges[i - 1], edges[i], i + 1)) return false;
  }
  return true;
}

bool is_blocked(std::span<const EdgeId> edges, const StrongBlockingSet& b) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i] != edges[j] && b.contains(edges[i], edges[j])) return true;
    }
  }
  return false;
}

bool is_blocked(const PathRecord& path, const StrongBlockingSet& b) {
  return is_blocked(path.edges, b);
}

PathRecord make_path(const WeightedGraph& g, NodeId start,
                     std::vector<EdgeId> edges, const StrongBlockingSet* b) {
  g.check_node(start);
  PathRecord path;
  path.nodes.push_back(start);
  for (EdgeId e : edges) {
    g.check_edge(e);
    const Edge& edge = g.edge(e);
    if (!edge.has_endpoint(path.nodes.back())) {
      throw UsageError("edge " + std::to_string(e) +
                       " does not continue the path");
    }
    path.nodes.push_back(edge.other(path.nodes.back()));
  }
  path.edges = std::move(edges);

  std::vector<EdgeId> sorted_edges = path.edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  path.flags.edge_simple =
      std::adjacent_find(sorted_edges.begin(), sorted_edges.end()) ==
      sorted_edges.end();
  std::vector<NodeId> sorted_nodes = path.nodes;
  std::sort(sorted_nodes.begin(), sorted_nodes.end());
  path.flags.simple =
      std::adjacent_find(sorted_nodes.begin(), sorted_nodes.end()) ==
      sorted_nodes.end();
  path.flags.alternating = is_alternating(path.edges);
  path.flags.unblocked = b ? !is_blocked(path.edges, *b) : true;
  return path;
}

std::optional<PathRecord> peel_alternating_kpath(const WeightedGraph& g,
                                                 std::size_t k) {
  if (k == 0) {
    if (g.node_count() == 0) return std::nullopt;
    return make_path(g, 0, {});
  }
  auto peeled = peel(g, EdgeMask(g.edge_count(), true), k);
  if (!peeled) return std::nullopt;
  PathRecord path = make_path(g, peeled->nodes.front(), peeled->edges);
  if (!path.flags.edge_simple || !path.flags.alternating) {
    throw std::logic_error("peeling produced an invalid alternating path");
  }
  return path;
}

std::optional<PathRecord> find_alternating_kpath(const WeightedGraph& g,
                                                 std::size_t k) {
  if (auto path = peel_alternating_kpath(g, k)) return path;
  return search_alternating(g, k);
}

PathCounts& PathCounts::operator+=(const PathCounts& o) {
  simple += o.simple;
  alternating += o.alternating;
  unblocked_alternating += o.unblocked_alternating;
  edge_simple += o.edge_simple;
  edge_simple_alternating += o.edge_simple_alternating;
  edge_simple_unblocked_alternating += o.edge_simple_unblocked_alternating;
  return *this;
}

PathCounts CensusReport::at(NodeId s, NodeId t) const {
  auto it = std::lower_bound(
      rows.begin(), rows.end(), std::pair{s, t},
      [](const CensusRow& r, std::pair<NodeId, NodeId> key) {
        return std::pair{r.s, r.t} < key;
      });
  if (it != rows.end() && it->s == s && it->t == t) return it->counts;
  return {};
}

CensusReport count_paths(const WeightedGraph& g, const StrongBlockingSet& b,
                         std::size_t j, PathFilter filter,
                         CensusLimits limits) {
  if (j == 0) throw UsageError("path length j must be positive");
  check_host(g, b);
  check_limits(g, j, limits);
  CensusReport report;
  report.j = j;
  report.filter = filter;
  report.node_count = g.node_count();
  report.edge_count = g.edge_count();
  report.average_degree = g.average_degree();

  const std::size_t n = g.node_count();
  TrailWalker walker(g, &b, {j, false, filter == PathFilter::alternating, false});
  std::vector<PathCounts> per_target(n);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(per_target.begin(), per_target.end(), PathCounts{});
    walker.walk(s, [&](const TrailWalker& w) {
      if (w.edges().size() < j) return true;
      PathCounts& c = per_target[w.nodes().back()];
      const bool alt = w.alternating();
      const bool unblocked_alt = alt && w.unblocked();
      ++c.edge_simple;
      c.edge_simple_alternating += alt ? 1 : 0;
      c.edge_simple_unblocked_alternating += unblocked_alt ? 1 : 0;
      if (w.simple()) {
        ++c.simple;
        c.alternating += alt ? 1 : 0;
        c.unblocked_alternating += unblocked_alt ? 1 : 0;
      }
      return true;
    });
    for (NodeId t = 0; t < n; ++t) {
      if (per_target[t].edge_simple == 0) continue;
      report.rows.push_back({s, t, j, per_target[t]});
      report.totals += per_target[t];
    }
  }
  return report;
}

void write_census_csv(std::ostream& out,
                      std::span<const CensusReport> reports) {
  out << "# schema: ftspan-census v1\n";
  out << "s,t,j,simple,alternating,unblocked_alternating\n";
  for (const CensusReport& r : reports) {
    for (const CensusRow& row : r.rows) {
      out << row.s << ',' << row.t << ',' << row.j << ',' << row.counts.simple
          << ',' << row.counts.alternating << ','
          << row.counts.unblocked_alternating << '\n';
    }
  }
}

bool ChokeSet::contains(EdgeId e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

ChokeSet build_choke_set(const WeightedGraph& h, const StrongBlockingSet& b,
                         NodeId s, NodeId t, std::size_t k, std::size_t f) {
  check_host(h, b);
  h.check_node(s);
  h.check_node(t);
  if (f == 0 || k == 0) throw UsageError("k and f must be positive");
  if (b.max_frequency() > f) {
    throw UsageError("choke sets need every edge in at most f = " +
                     std::to_string(f) + " blocks, found " +
                     std::to_string(b.max_frequency()));
  }
  ChokeSet choke{s, t, {}, 0};
  if (s == t) return choke;

  std::vector<EdgeId> heaviest_of_path;
  TrailWalker walker(h, &b, {k, true, false, true});
  walker.walk(s, [&](const TrailWalker& w) {
    if (w.nodes().back() != t) return true;
    heaviest_of_path.push_back(WeightedGraph::heaviest(w.edges()));
    return false;  // a simple path cannot return to t
  });
  choke.paths_examined = heaviest_of_path.size();

  // Each round adds the heaviest edge over all paths whose heaviest edge is
  // still uncovered.
  for (;;) {
    std::optional<EdgeId> pick;
    for (EdgeId top : heaviest_of_path) {
      if (choke.contains(top)) continue;
      if (!pick || top > *pick) pick = top;
    }
    if (!pick) break;
    choke.edges.push_back(*pick);
  }
  return choke;
}

DispersionReport check_dispersion(const WeightedGraph& h,
                                  const StrongBlockingSet& b, std::size_t k,
                                  std::size_t f, double c,
                                  CensusLimits limits) {
  check_host(h, b);
  check_limits(h, k, limits);
  if (k == 0 || f == 0) throw UsageError("k and f must be positive");
  if (!(c > 0)) throw UsageError("dispersion constant must be positive");

  DispersionReport report;
  report.c = c;
  const double base = c * static_cast<double>(k * k * f);
  for (std::size_t j = 0; j <= k; ++j) {
    DispersionLevel level;
    level.j = j;
    level.exponent = j / 2;
    level.bound = std::pow(base, static_cast<double>(level.exponent));
    report.levels.push_back(level);
  }

  const std::size_t n = h.node_count();
  // counts[t * (k+1) + j] for the current source.
  std::vector<std::uint64_t> counts(n * (k + 1));
  TrailWalker walker(h, &b, {k, true, true, true});
  for (NodeId s = 0; s < n; ++s) {
    std::fill(counts.begin(), counts.end(), 0);
    walker.walk(s, [&](const TrailWalker& w) {
      ++counts[w.nodes().back() * (k + 1) + w.edges().size()];
      return true;
    });
    for (NodeId t = 0; t < n; ++t) {
      for (std::size_t j = 0; j <= k; ++j) {
        const std::uint64_t count = counts[t * (k + 1) + j];
        DispersionLevel& level = report.levels[j];
        if (count > level.max_count) {
          level.max_count = count;
          level.argmax_s = s;
          level.argmax_t = t;
        }
      }
    }
  }
  for (DispersionLevel& level : report.levels) {
    if (static_cast<double>(level.max_count) > level.bound) report.ok = false;
    if (level.exponent > 0 && level.max_count > 0) {
      level.empirical_constant =
          std::pow(static_cast<double>(level.max_count),
                   1.0 / static_cast<double>(level.exponent)) /
          static_cast<double>(k * k * f);
      report.max_empirical_constant =
          std::max(report.max_empirical_constant, level.empirical_constant);
    }
  }
  return report;
}

SplitResult split_high_degree(const WeightedGraph& h,
                              const StrongBlockingSet& b) {
  check_host(h, b);
  SplitResult out;
  out.threshold = 4.0 * h.average_degree();
  std::vector<EdgeSpec> specs = h.edge_specs();
  std::vector<std::pair<NodeId, NodeId>> keys;
  for (const Edge& e : h.edges()) keys.push_back(e.tiebreak);

  // incident[x]: edge ids at x, kept sorted.
  std::vector<std::vector<EdgeId>> incident(h.node_count());
  for (EdgeId e = 0; e < specs.size(); ++e) {
    incident[specs[e].u].push_back(e);
    incident[specs[e].v].push_back(e);
  }
  out.node_origin.resize(h.node_count());
  for (NodeId x = 0; x < h.node_count(); ++x) out.node_origin[x] = x;

  auto splittable = [&](NodeId x) {
    const auto degree = static_cast<double>(incident[x].size());
    return incident[x].size() >= 2 && degree >= out.threshold;
  };
  for (NodeId x = 0; x < incident.size(); ++x) {
    // A node may need several halvings; its new half is queued at the end.
    while (splittable(x)) {
      const auto fresh = static_cast<NodeId>(incident.size());
      std::vector<EdgeId>& edges = incident[x];
      const std::size_t keep = (edges.size() + 1) / 2;
      std::vector<EdgeId> moved(edges.begin() + static_cast<std::ptrdiff_t>(keep),
                                edges.end());
      edges.resize(keep);
      for (EdgeId e : moved) {
        EdgeSpec& spec = specs[e];
        (spec.u == x ? spec.u : spec.v) = fresh;
      }
      incident.push_back(std::move(moved));
      out.node_origin.push_back(out.node_origin[x]);
    }
  }
  out.graph = WeightedGraph::with_tiebreak_keys(incident.size(),
                                                std::move(specs), std::move(keys));
  out.blocks = StrongBlockingSet(out.graph.edge_count(),
                                 {b.blocks().begin(), b.blocks().end()});
  return out;
}

SampledSubgraph random_edge_subsample(const WeightedGraph& h,
                                      const StrongBlockingSet& b, double p,
                                      std::uint64_t seed) {
  check_host(h, b);
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError("probability must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep_edge(p);
  EdgeMask keep(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) keep.set(e, keep_edge(rng));
  SampledSubgraph out;
  out.graph = h.subgraph(keep, &out.original_edge);
  out.blocks = restrict_blocking_set(b, out.original_edge);
  return out;
}

AlphaTrend alpha_trend(const WeightedGraph& h, const StrongBlockingSet& b,
                       std::size_t k, std::span<const double> probabilities,
                       std::uint64_t seed, CensusLimits limits) {
  AlphaTrend trend;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    SampledSubgraph sub = random_edge_subsample(h, b, probabilities[i], seed + i);
    CensusReport r =
        count_paths(sub.graph, sub.blocks, k, PathFilter::alternating, limits);
    AlphaSample sample{probabilities[i], sub.graph.edge_count(),
                       sub.graph.average_degree(),
                       r.totals.unblocked_alternating};
    trend.samples.push_back(sample);
    if (sample.alpha > 0 && sample.average_degree > 0) {
      xs.push_back(std::log(sample.average_degree));
      ys.push_back(std::log(static_cast<double>(sample.alpha)));
    }
  }
  if (xs.size() >= 2) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom != 0) trend.slope = (n * sxy - sx * sy) / denom;
  }
  return trend;
}

}  // namespace ftspan
