#include "ftspan/greedy_spanner.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "ftspan/errors.hpp"
#include "ftspan/fault_decision.hpp"

namespace ftspan {

std::string_view to_string(Algorithm a) {
  return a == Algorithm::exact ? "exact" : "approx";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "exact") return Algorithm::exact;
  if (name == "approx" || name == "approximate") return Algorithm::approximate;
  throw UsageError("unknown algorithm '" + std::string(name) + "'");
}

namespace {

// Input-graph ids of kept edges plus their forcing sets (also input ids),
// converted to spanner ids once the spanner is materialized.
SpannerResult assemble(const WeightedGraph& g, const std::vector<EdgeId>& kept,
                       const std::vector<FaultSet>& forcing, std::size_t f,
                       std::size_t k, Algorithm algorithm) {
  SpannerResult result;
  result.f = f;
  result.k = k;
  result.algorithm = algorithm;
  EdgeMask keep(g.edge_count());
  for (EdgeId e : kept) keep.insert(e);
  result.spanner = g.subgraph(keep, &result.input_edge);

  constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();
  std::vector<EdgeId> to_spanner(g.edge_count(), kNone);
  for (EdgeId i = 0; i < result.input_edge.size(); ++i) {
    to_spanner[result.input_edge[i]] = i;
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const EdgeId e = to_spanner[kept[i]];
    std::vector<EdgeId> mapped;
    for (EdgeId x : forcing[i]) mapped.push_back(to_spanner[x]);
    result.trace.kept.push_back(e);
    result.trace.forcing.emplace(e, FaultSet(std::move(mapped)));
  }
  return result;
}

void check_params(std::size_t k) {
  if (k == 0) throw UsageError("k must be positive");
}

}  // namespace

SpannerResult ft_greedy_exact(const WeightedGraph& g, std::size_t f,
                              std::size_t k, GreedyOptions options) {
  check_params(k);
  const double stretch = static_cast<double>(2 * k - 1);
  EdgeMask absent(g.edge_count(), true);
  std::vector<EdgeId> kept;
  std::vector<FaultSet> forcing;
  std::size_t branches = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    FaultDecision d =
        exact_fault_decision(g, absent, edge.u, edge.v, f, stretch * edge.weight);
    branches += d.branches;
    if (options.branch_budget != 0 && branches > options.branch_budget) {
      throw BudgetExceeded("exact greedy exceeded branch budget of " +
                           std::to_string(options.branch_budget));
    }
    if (!d.yes) continue;
    kept.push_back(e);
    forcing.push_back(std::move(d.witness));
    absent.erase(e);
  }
  return assemble(g, kept, forcing, f, k, Algorithm::exact);
}

SpannerResult ft_greedy_approx(const WeightedGraph& g, std::size_t f,
                               std::size_t k) {
  check_params(k);
  EdgeMask absent(g.edge_count(), true);
  std::vector<EdgeId> kept;
  std::vector<FaultSet> forcing;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    ApproxDecision d = approx_fault_decision(g, absent, edge.u, edge.v, f, k);
    if (!d.yes) continue;
    kept.push_back(e);
    forcing.push_back(std::move(d.cover));
    absent.erase(e);
  }
  return assemble(g, kept, forcing, f, k, Algorithm::approximate);
}

SpannerResult ft_greedy(const WeightedGraph& g, std::size_t f, std::size_t k,
                        Algorithm algorithm, GreedyOptions options) {
  if (algorithm == Algorithm::exact) return ft_greedy_exact(g, f, k, options);
  return ft_greedy_approx(g, f, k);
}

void write_trace(std::ostream& out, const SpannerResult& result) {
  out << "ftspan-trace v1\n";
  out << "algorithm " << to_string(result.algorithm) << " f " << result.f
      << " k " << result.k << '\n';
  for (EdgeId e : result.trace.kept) {
    out << e << ':';
    auto it = result.trace.forcing.find(e);
    if (it != result.trace.forcing.end()) {
      for (EdgeId x : it->second) out << ' ' << x;
    }
    out << '\n';
  }
}

TraceFile read_trace(std::istream& in) {
  TraceFile file;
  std::string line;
  if (!std::getline(in, line) || line != "ftspan-trace v1") {
    throw ParseError("trace: missing 'ftspan-trace v1' header");
  }
  if (!std::getline(in, line)) throw ParseError("trace: missing parameters");
  {
    std::istringstream ss(line);
    std::string a, alg, fk, kk;
    if (!(ss >> a >> alg >> fk >> file.f >> kk >> file.k) || a != "algorithm" ||
        fk != "f" || kk != "k") {
      throw ParseError("trace: bad parameter line '" + line + "'");
    }
    try {
      file.algorithm = parse_algorithm(alg);
    } catch (const UsageError& e) {
      throw ParseError(std::string("trace: ") + e.what());
    }
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("trace: bad line '" + line + "'");
    }
    std::istringstream head(line.substr(0, colon));
    EdgeId e = 0;
    if (!(head >> e)) throw ParseError("trace: bad edge id in '" + line + "'");
    std::istringstream rest(line.substr(colon + 1));
    std::vector<EdgeId> xs;
    for (EdgeId x; rest >> x;) xs.push_back(x);
    if (!rest.eof()) throw ParseError("trace: bad fault list in '" + line + "'");
    file.trace.kept.push_back(e);
    file.trace.forcing.emplace(e, FaultSet(std::move(xs)));
  }
  return file;
}

}  // namespace ftspan
