#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <exception>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "ftspan/blocking_sets.hpp"
#include "ftspan/eft_verify.hpp"
#include "ftspan/errors.hpp"
#include "ftspan/graph_io.hpp"
#include "ftspan/path_census.hpp"

namespace ftspan::cli {

double size_bound(std::size_t n, std::size_t f, std::size_t k) {
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double fd = static_cast<double>(f);
  const double f_exponent = k % 2 == 1 ? 0.5 - 0.5 / kd : 0.5;
  const double f_term = f == 0 ? 1.0 : std::pow(fd, f_exponent);
  return kd * kd * f_term * std::pow(nd, 1.0 + 1.0 / kd) + kd * fd * nd;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  struct Cell {
    std::size_t n, trial, k, f;
    Algorithm algorithm;
  };
  std::vector<Cell> cells;
  for (std::size_t n : config.n_values) {
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
      for (std::size_t k : config.k_values) {
        for (Algorithm a : config.algorithms) {
          for (std::size_t f : config.f_values) {
            cells.push_back({n, trial, k, f, a});
          }
        }
      }
    }
  }

  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const Cell& c = cells[i];
      try {
        const std::uint64_t seed = config.seed + c.trial;
        const auto pairs = c.n < 2 ? 0 : c.n * (c.n - 1) / 2;
        const auto m = std::min<std::size_t>(
            pairs, static_cast<std::size_t>(std::llround(
                       config.average_degree * static_cast<double>(c.n) / 2)));
        WeightedGraph g = gen_random(c.n, m, config.weights, seed);
        SpannerResult r = ft_greedy(g, c.f, c.k, c.algorithm,
                                    {config.branch_budget});
        SweepRow& row = rows[i];
        row = {c.n, c.f, c.k, c.algorithm, seed, r.spanner.edge_count(),
               size_bound(c.n, c.f, c.k), 0.0};
        row.ratio = static_cast<double>(row.edges) / row.bound;
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      config.threads != 0 ? config.threads
                          : std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "# schema: ftspan-sweep v1\n";
  out << "n,f,k,algorithm,seed,edges,bound,ratio\n";
  for (const SweepRow& r : rows) {
    out << r.n << ',' << r.f << ',' << r.k << ',' << to_string(r.algorithm)
        << ',' << r.seed << ',' << r.edges << ',' << format_weight(r.bound)
        << ',' << format_weight(r.ratio) << '\n';
  }
}

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  return out;
}

StrongBlockingSet load_blocking_set(const std::string& path,
                                    std::size_t host_edges) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_blocking_set(in, host_edges);
}

struct BuildArgs {
  std::string input, out, trace_out, blocking_out, alg = "exact";
  std::size_t f = 0, k = 2;
  double max_fault_sets = 1e10;
  std::size_t branch_budget = 50'000'000;
  bool force = false;
};

int cmd_build(const BuildArgs& a, std::ostream& out) {
  const Algorithm algorithm = parse_algorithm(a.alg);
  GraphFile file = read_graph_file(a.input);
  const WeightedGraph& g = file.graph;
  GreedyOptions options;
  if (algorithm == Algorithm::exact && !a.force) {
    const double sets = fault_set_count(g.edge_count(), a.f);
    if (sets > a.max_fault_sets) {
      throw BudgetExceeded("exact decision could face " + std::to_string(sets) +
                           " fault sets (limit " +
                           std::to_string(a.max_fault_sets) +
                           "); use --force or --alg approx");
    }
    options.branch_budget = a.branch_budget;
  }
  SpannerResult result = ft_greedy(g, a.f, a.k, algorithm, options);
  if (!a.out.empty()) {
    auto stream = open_output(a.out);
    write_graph(stream, result.spanner);
  }
  if (!a.trace_out.empty()) {
    auto stream = open_output(a.trace_out);
    write_trace(stream, result);
  }
  if (!a.blocking_out.empty()) {
    auto stream = open_output(a.blocking_out);
    write_blocking_set(stream, extract_blocking_set(result));
  }
  out << "edges " << result.spanner.edge_count() << '\n';
  return kOk;
}

struct VerifyArgs {
  std::string input, spanner, mode = "exhaustive";
  std::size_t f = 0, k = 2, trials = 1000;
  std::uint64_t seed = 1;
  double budget = 5e8;
  bool force = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  WeightedGraph g = read_graph_file(a.input).graph;
  WeightedGraph h = read_graph_file(a.spanner).graph;
  VerifyOptions options;
  if (a.mode == "exhaustive") {
    options.mode = VerifyMode::exhaustive;
  } else if (a.mode == "sampled") {
    options.mode = VerifyMode::sampled;
  } else {
    throw UsageError("mode must be exhaustive or sampled");
  }
  options.trials = a.trials;
  options.seed = a.seed;
  options.budget = a.budget;
  options.force = a.force;
  EftVerdict verdict = verify_eft(g, h, a.f, a.k, options);
  if (!verdict.ok) {
    out << format_violation(*verdict.violation) << '\n';
    return kVerificationFailed;
  }
  out << "OK fault_sets=" << verdict.fault_sets_checked
      << (options.mode == VerifyMode::sampled ? " (sampled, not a certificate)"
                                               : "")
      << '\n';
  return kOk;
}

struct SweepArgs {
  std::string family = "random", weights = "uniform:1,2", out;
  std::vector<std::size_t> n{20, 40, 80}, f{0, 1, 2, 4}, k{2, 3};
  std::vector<std::string> alg{"exact"};
  double degree = 8.0, ceiling = 10.0;
  std::size_t trials = 1, threads = 0, branch_budget = 0;
  std::uint64_t seed = 1;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (a.family != "random") {
    throw UsageError("only the 'random' family is supported by sweep");
  }
  SweepConfig config;
  config.n_values = a.n;
  config.f_values = a.f;
  config.k_values = a.k;
  config.algorithms.clear();
  for (const std::string& name : a.alg) {
    config.algorithms.push_back(parse_algorithm(name));
  }
  config.average_degree = a.degree;
  config.weights = parse_weight_mode(a.weights);
  config.trials = a.trials;
  config.seed = a.seed;
  config.threads = a.threads;
  config.branch_budget = a.branch_budget;
  auto rows = run_sweep(config);
  if (a.out.empty()) {
    write_sweep_csv(out, rows);
  } else {
    auto stream = open_output(a.out);
    write_sweep_csv(stream, rows);
  }
  double worst = 0;
  for (const SweepRow& r : rows) worst = std::max(worst, r.ratio);
  out << "cells " << rows.size() << " max_ratio " << format_weight(worst)
      << " ceiling " << format_weight(a.ceiling) << '\n';
  return worst <= a.ceiling ? kOk : kVerificationFailed;
}

struct CensusArgs {
  std::string input, blocking, out;
  std::size_t k = 2, f = 1;
  double c = 8.0;
  bool reduce = false, force = false;
  std::vector<double> trend;
  std::uint64_t seed = 1;
};

int cmd_census(const CensusArgs& a, std::ostream& out) {
  if (a.k == 0) throw UsageError("k must be positive");
  if (a.f == 0) throw UsageError("f must be positive");
  WeightedGraph h = read_graph_file(a.input).graph;
  StrongBlockingSet b = load_blocking_set(a.blocking, h.edge_count());
  std::size_t f_eff = a.f;
  if (a.reduce) {
    ReducedBlocking reduced = reduce_block_frequency(h, b, a.f);
    out << "reduced deleted_edges " << reduced.deleted.size() << '\n';
    h = std::move(reduced.graph);
    b = std::move(reduced.blocks);
    f_eff = 4 * a.f - 1;
  } else if (b.max_frequency() > a.f) {
    throw UsageError("an edge lies in " + std::to_string(b.max_frequency()) +
                     " blocks, more than f = " + std::to_string(a.f) +
                     "; pass --reduce");
  }
  CensusLimits limits;
  limits.force = a.force;

  std::vector<CensusReport> reports;
  for (std::size_t j = 1; j <= a.k; ++j) {
    reports.push_back(count_paths(h, b, j, PathFilter::all, limits));
  }
  if (!a.out.empty()) {
    auto stream = open_output(a.out);
    write_census_csv(stream, reports);
  }
  out << "nodes " << h.node_count() << " edges " << h.edge_count()
      << " average_degree " << format_weight(h.average_degree()) << '\n';
  out << "blocks " << b.size() << " max_frequency " << b.max_frequency()
      << " f " << f_eff << '\n';
  for (const CensusReport& r : reports) {
    out << "j " << r.j << " simple " << r.totals.simple << " alternating "
        << r.totals.alternating << " unblocked_alternating "
        << r.totals.unblocked_alternating << " edge_simple_alternating "
        << r.totals.edge_simple_alternating << '\n';
  }

  const std::size_t choke_bound = a.k * f_eff + 1;
  std::size_t largest = 0, violations = 0;
  for (NodeId s = 0; s < h.node_count(); ++s) {
    for (NodeId t = 0; t < h.node_count(); ++t) {
      if (s == t) continue;
      ChokeSet choke = build_choke_set(h, b, s, t, a.k, f_eff);
      largest = std::max(largest, choke.edges.size());
      if (choke.edges.size() > choke_bound) ++violations;
    }
  }
  out << "choke max_size " << largest << " bound " << choke_bound
      << " violations " << violations << '\n';

  DispersionReport dispersion = check_dispersion(h, b, a.k, f_eff, a.c, limits);
  for (const DispersionLevel& level : dispersion.levels) {
    out << "dispersion j " << level.j << " max_count " << level.max_count
        << " bound " << format_weight(level.bound) << " constant "
        << format_weight(level.empirical_constant) << '\n';
  }
  out << "dispersion " << (dispersion.ok ? "ok" : "FAIL") << " c "
      << format_weight(a.c) << " max_empirical_constant "
      << format_weight(dispersion.max_empirical_constant) << '\n';

  if (!a.trend.empty()) {
    AlphaTrend trend = alpha_trend(h, b, a.k, a.trend, a.seed, limits);
    for (const AlphaSample& s : trend.samples) {
      out << "trend p " << format_weight(s.p) << " edges " << s.edges
          << " average_degree " << format_weight(s.average_degree) << " alpha "
          << s.alpha << '\n';
    }
    out << "trend slope "
        << (trend.slope ? format_weight(*trend.slope) : std::string("n/a"))
        << '\n';
  }
  return violations == 0 && dispersion.ok ? kOk : kVerificationFailed;
}

struct GenArgs {
  std::string kind, out, weights = "unit", input, name;
  std::size_t n = 10, m = 20, r = 3, copies_left = 1, copies_right = 1;
  std::uint64_t seed = 1;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  WeightedGraph g;
  std::optional<std::size_t> left;
  if (a.kind == "random") {
    g = gen_random(a.n, a.m, parse_weight_mode(a.weights), a.seed);
  } else if (a.kind == "regular") {
    g = gen_regular(a.n, a.r, a.seed);
  } else if (a.kind == "blowup") {
    GraphFile file = read_graph_file(a.input);
    if (!file.left_count) {
      throw ParseError(a.input + ": blow-up needs an 'L <count>' header");
    }
    g = blow_up(file.graph, *file.left_count, a.copies_left, a.copies_right);
    left = *file.left_count * a.copies_left;
  } else if (a.kind == "petersen") {
    g = petersen_graph();
  } else if (a.kind == "cycle") {
    g = cycle_graph(a.n);
  } else if (a.kind == "complete") {
    g = complete_graph(a.n);
  } else {
    throw UsageError("unknown generator '" + a.kind + "'");
  }
  if (a.out.empty()) {
    write_graph(out, g, left);
  } else {
    auto stream = open_output(a.out);
    write_graph(stream, g, left);
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fault-tolerant greedy spanners, blocking sets and path census"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "run a greedy spanner construction");
  b->add_option("--input", build.input, "input graph file")->required();
  b->add_option("--f", build.f, "fault budget");
  b->add_option("--k", build.k, "stretch parameter (stretch 2k-1)");
  b->add_option("--alg", build.alg, "exact or approx");
  b->add_option("--out", build.out, "spanner output file");
  b->add_option("--trace-out", build.trace_out, "greedy trace output file");
  b->add_option("--blocking-out", build.blocking_out,
                "strong blocking set output file");
  b->add_option("--max-fault-sets", build.max_fault_sets,
                "refuse exact runs when sum_{i<=f} C(m,i) exceeds this");
  b->add_option("--branch-budget", build.branch_budget,
                "total branch-and-bound nodes allowed for an exact run");
  b->add_flag("--force", build.force, "ignore safety budgets");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "certify an f-EFT (2k-1)-spanner");
  v->add_option("--input", verify.input, "original graph file")->required();
  v->add_option("--spanner", verify.spanner, "spanner graph file")->required();
  v->add_option("--f", verify.f, "fault budget");
  v->add_option("--k", verify.k, "stretch parameter");
  v->add_option("--mode", verify.mode, "exhaustive or sampled");
  v->add_option("--trials", verify.trials, "fault sets drawn in sampled mode");
  v->add_option("--seed", verify.seed, "seed for sampled mode");
  v->add_option("--budget", verify.budget,
                "exhaustive limit on fault sets times n^2");
  v->add_flag("--force", verify.force, "ignore the exhaustive budget");

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "spanner sizes against the size bound");
  s->add_option("--family", sweep.family, "input family (random)");
  s->add_option("--n", sweep.n, "node counts")->delimiter(',');
  s->add_option("--f", sweep.f, "fault budgets")->delimiter(',');
  s->add_option("--k", sweep.k, "stretch parameters")->delimiter(',');
  s->add_option("--alg", sweep.alg, "algorithms")->delimiter(',');
  s->add_option("--degree", sweep.degree, "average degree of random inputs");
  s->add_option("--weights", sweep.weights, "unit or uniform:<lo>,<hi>");
  s->add_option("--trials", sweep.trials, "graphs per node count");
  s->add_option("--seed", sweep.seed, "base seed");
  s->add_option("--threads", sweep.threads, "worker threads (0 = all cores)");
  s->add_option("--branch-budget", sweep.branch_budget,
                "per-run branch limit for exact runs (0 = none)");
  s->add_option("--ceiling", sweep.ceiling, "largest acceptable edges/bound");
  s->add_option("--out", sweep.out, "CSV output file (default stdout)");

  CensusArgs census;
  auto* c = app.add_subcommand("census", "path counts, choke sets, dispersion");
  c->add_option("--input", census.input, "graph file (usually a spanner)")
      ->required();
  c->add_option("--blocking", census.blocking, "blocking set file")->required();
  c->add_option("--k", census.k, "path length bound");
  c->add_option("--f", census.f, "blocks allowed per edge");
  c->add_option("--c", census.c, "dispersion constant");
  c->add_flag("--reduce", census.reduce,
              "first delete edges lying in >= 4f blocks");
  c->add_option("--trend", census.trend,
                "subsampling probabilities for the alpha trend")
      ->delimiter(',');
  c->add_option("--seed", census.seed, "seed for --trend");
  c->add_option("--out", census.out, "census CSV output file");
  c->add_flag("--force", census.force, "ignore enumeration limits");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "write a generated graph");
  g->add_option("kind", gen.kind,
                "random | regular | blowup | petersen | cycle | complete")
      ->required();
  g->add_option("--n", gen.n, "node count");
  g->add_option("--m", gen.m, "edge count (random)");
  g->add_option("--r", gen.r, "degree (regular)");
  g->add_option("--weights", gen.weights, "unit or uniform:<lo>,<hi>");
  g->add_option("--seed", gen.seed, "seed");
  g->add_option("--input", gen.input, "bipartite base graph (blowup)");
  g->add_option("--copies-left", gen.copies_left, "copies per left node");
  g->add_option("--copies-right", gen.copies_right, "copies per right node");
  g->add_option("--out", gen.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*b) return cmd_build(build, out);
    if (*v) return cmd_verify(verify, out);
    if (*s) return cmd_sweep(sweep, out);
    if (*c) return cmd_census(census, out);
    if (*g) return cmd_gen(gen, out);
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << '\n';
    return kBudgetRefused;
  } catch (const ParseError& e) {
    err << "input: " << e.what() << '\n';
    return kInputError;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kInputError;
  } catch (const CorruptTraceError& e) {
    err << "trace: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace ftspan::cli
