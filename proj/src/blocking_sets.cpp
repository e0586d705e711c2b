#include "ftspan/blocking_sets.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "ftspan/errors.hpp"

namespace ftspan {

Block::Block(EdgeId a, EdgeId b)
    : first(std::min(a, b)), second(std::max(a, b)) {
  if (a == b) {
    throw UsageError("block needs two distinct edges, got " +
                     std::to_string(a) + " twice");
  }
}

StrongBlockingSet::StrongBlockingSet(std::size_t host_edge_count,
                                     std::vector<Block> blocks)
    : host_edge_count_(host_edge_count), blocks_(std::move(blocks)) {
  for (const Block& b : blocks_) {
    if (b.second >= host_edge_count_) {
      throw UsageError("block edge " + std::to_string(b.second) +
                       " out of range for host with " +
                       std::to_string(host_edge_count_) + " edges");
    }
  }
  std::sort(blocks_.begin(), blocks_.end());
  blocks_.erase(std::unique(blocks_.begin(), blocks_.end()), blocks_.end());

  std::vector<std::size_t> count(host_edge_count_, 0);
  for (const Block& b : blocks_) {
    ++count[b.first];
    ++count[b.second];
  }
  offsets_.assign(host_edge_count_ + 1, 0);
  for (std::size_t e = 0; e < host_edge_count_; ++e) {
    offsets_[e + 1] = offsets_[e] + count[e];
  }
  partners_.assign(offsets_.back(), 0);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Block& b : blocks_) {
    partners_[fill[b.first]++] = b.second;
    partners_[fill[b.second]++] = b.first;
  }
  for (std::size_t e = 0; e < host_edge_count_; ++e) {
    std::sort(partners_.begin() + static_cast<std::ptrdiff_t>(offsets_[e]),
              partners_.begin() + static_cast<std::ptrdiff_t>(offsets_[e + 1]));
  }
}

bool StrongBlockingSet::contains(EdgeId a, EdgeId b) const {
  if (a >= host_edge_count_ || b >= host_edge_count_) return false;
  auto p = partners(a);
  return std::binary_search(p.begin(), p.end(), b);
}

std::span<const EdgeId> StrongBlockingSet::partners(EdgeId e) const {
  if (e >= host_edge_count_) return {};
  return {partners_.data() + offsets_[e], partners_.data() + offsets_[e + 1]};
}

std::size_t StrongBlockingSet::max_frequency() const {
  std::size_t best = 0;
  for (std::size_t e = 0; e < host_edge_count_; ++e) {
    best = std::max(best, offsets_[e + 1] - offsets_[e]);
  }
  return best;
}

StrongBlockingSet extract_blocking_set(const SpannerResult& result) {
  return extract_blocking_set(result.spanner, result.trace);
}

StrongBlockingSet extract_blocking_set(const WeightedGraph& spanner,
                                       const GreedyTrace& trace) {
  std::vector<Block> blocks;
  for (EdgeId e = 0; e < spanner.edge_count(); ++e) {
    auto it = trace.forcing.find(e);
    if (it == trace.forcing.end()) {
      throw CorruptTraceError("no forcing set recorded for spanner edge " +
                              std::to_string(e));
    }
    for (EdgeId x : it->second) {
      // Forcing edges were in the partial spanner, so precede e canonically.
      if (x >= e) {
        throw CorruptTraceError("forcing set of edge " + std::to_string(e) +
                                " names edge " + std::to_string(x) +
                                " not considered before it");
      }
      blocks.emplace_back(x, e);
    }
  }
  for (const auto& [e, faults] : trace.forcing) {
    if (e >= spanner.edge_count()) {
      throw CorruptTraceError("trace names edge " + std::to_string(e) +
                              " absent from the spanner");
    }
  }
  return StrongBlockingSet(spanner.edge_count(), std::move(blocks));
}

BlockingVerdict verify_strong_blocking(const WeightedGraph& h,
                                       const StrongBlockingSet& b,
                                       std::size_t t, std::size_t max_cycles) {
  if (t == 0) throw UsageError("cycle length bound t must be positive");
  if (b.host_edge_count() != h.edge_count()) {
    throw UsageError("blocking set was built for a different host graph");
  }
  BlockingVerdict verdict;
  verdict.complete = for_each_cycle(h, t, [&](const Cycle& c) {
    if (max_cycles != 0 && verdict.cycles_checked == max_cycles) return false;
    ++verdict.cycles_checked;
    const EdgeId top = WeightedGraph::heaviest(c.edges);
    auto partners = b.partners(top);
    bool blocked = std::any_of(c.edges.begin(), c.edges.end(), [&](EdgeId x) {
      return x != top && std::binary_search(partners.begin(), partners.end(), x);
    });
    if (!blocked) {
      verdict.ok = false;
      verdict.counterexample = c;
      return false;
    }
    return true;
  });
  // Stopping on a counterexample is a complete (negative) answer.
  if (!verdict.ok) verdict.complete = true;
  return verdict;
}

StrongBlockingSet restrict_blocking_set(const StrongBlockingSet& b,
                                        std::span<const EdgeId> original_edge) {
  constexpr EdgeId kGone = std::numeric_limits<EdgeId>::max();
  std::vector<EdgeId> to_new(b.host_edge_count(), kGone);
  for (EdgeId i = 0; i < original_edge.size(); ++i) {
    if (original_edge[i] >= b.host_edge_count()) {
      throw UsageError("subgraph edge map exceeds the blocking set's host");
    }
    to_new[original_edge[i]] = i;
  }
  std::vector<Block> kept;
  for (const Block& blk : b) {
    if (to_new[blk.first] != kGone && to_new[blk.second] != kGone) {
      kept.emplace_back(to_new[blk.first], to_new[blk.second]);
    }
  }
  return StrongBlockingSet(original_edge.size(), std::move(kept));
}

ReducedBlocking reduce_block_frequency(const WeightedGraph& h,
                                       const StrongBlockingSet& b,
                                       std::size_t f) {
  if (f == 0) throw UsageError("frequency parameter f must be positive");
  if (b.host_edge_count() != h.edge_count()) {
    throw UsageError("blocking set was built for a different host graph");
  }
  if (b.size() > f * h.edge_count()) {
    throw UsageError("reduce_block_frequency requires |B| <= f |E|, got " +
                     std::to_string(b.size()) + " > " +
                     std::to_string(f * h.edge_count()));
  }
  const std::size_t m = h.edge_count();
  std::vector<std::size_t> freq(m);
  for (EdgeId e = 0; e < m; ++e) freq[e] = b.frequency(e);
  EdgeMask alive(m, true);

  ReducedBlocking out;
  for (;;) {
    EdgeId pick = 0;
    std::size_t best = 0;
    for (EdgeId e = 0; e < m; ++e) {
      if (alive.contains(e) && freq[e] > best) {
        best = freq[e];
        pick = e;
      }
    }
    if (best < 4 * f) break;
    alive.erase(pick);
    out.deleted.push_back(pick);
    for (EdgeId x : b.partners(pick)) {
      if (alive.contains(x)) --freq[x];
    }
  }

  out.graph = h.subgraph(alive, &out.original_edge);
  out.blocks = restrict_blocking_set(b, out.original_edge);
  return out;
}

void write_blocking_set(std::ostream& out, const StrongBlockingSet& b) {
  for (const Block& blk : b) out << blk.first << ' ' << blk.second << '\n';
}

StrongBlockingSet read_blocking_set(std::istream& in,
                                    std::size_t host_edge_count) {
  std::vector<Block> blocks;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    EdgeId a = 0, c = 0;
    if (!(ss >> a)) continue;
    std::string extra;
    if (!(ss >> c) || (ss >> extra)) {
      throw ParseError("blocking set line " + std::to_string(number) +
                       ": expected 'e1 e2'");
    }
    try {
      blocks.emplace_back(a, c);
    } catch (const UsageError& e) {
      throw ParseError("blocking set line " + std::to_string(number) + ": " +
                       e.what());
    }
  }
  try {
    return StrongBlockingSet(host_edge_count, std::move(blocks));
  } catch (const UsageError& e) {
    throw ParseError(std::string("blocking set: ") + e.what());
  }
}

}  // namespace ftspan
