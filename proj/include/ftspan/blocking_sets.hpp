#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/greedy_spanner.hpp"

namespace ftspan {

// Unordered edge pair, canonically lighter edge first.
struct Block {
  EdgeId first = 0;
  EdgeId second = 0;

  Block() = default;
  Block(EdgeId a, EdgeId b);  // throws UsageError if a == b

  bool contains(EdgeId e) const { return e == first || e == second; }
  friend auto operator<=>(const Block&, const Block&) = default;
};

// A set of blocks over the edges of one host graph. Ids are validated against
// the host's edge count; duplicates are merged.
class StrongBlockingSet {
 public:
  StrongBlockingSet() = default;
  StrongBlockingSet(std::size_t host_edge_count, std::vector<Block> blocks);

  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  std::size_t host_edge_count() const { return host_edge_count_; }
  std::span<const Block> blocks() const { return blocks_; }
  auto begin() const { return blocks_.begin(); }
  auto end() const { return blocks_.end(); }

  bool contains(EdgeId a, EdgeId b) const;
  // Edges sharing a block with e, sorted.
  std::span<const EdgeId> partners(EdgeId e) const;
  std::size_t frequency(EdgeId e) const { return partners(e).size(); }
  std::size_t max_frequency() const;

 private:
  std::size_t host_edge_count_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> partners_;
};

// B = {(x, e) : e kept, x in F_e}, in spanner edge ids. Throws
// CorruptTraceError if a spanner edge has no forcing set or a forcing set
// names an edge not considered before e.
StrongBlockingSet extract_blocking_set(const SpannerResult& result);
StrongBlockingSet extract_blocking_set(const WeightedGraph& spanner,
                                       const GreedyTrace& trace);

struct BlockingVerdict {
  bool ok = true;
  std::optional<Cycle> counterexample;
  std::size_t cycles_checked = 0;
  // False when max_cycles stopped enumeration before every cycle was seen;
  // an ok verdict is then not a certificate.
  bool complete = true;
};

// Every cycle C of at most t edges must contain a block with both edges in C,
// one of which is the heaviest edge of C. Exhaustive over enumerate_cycles;
// max_cycles = 0 means no cap.
BlockingVerdict verify_strong_blocking(const WeightedGraph& h,
                                       const StrongBlockingSet& b,
                                       std::size_t t,
                                       std::size_t max_cycles = 0);

// Blocks of b whose edges both survive in a subgraph, renumbered to the
// subgraph's ids. original_edge maps subgraph ids to ids of b's host.
StrongBlockingSet restrict_blocking_set(const StrongBlockingSet& b,
                                        std::span<const EdgeId> original_edge);

struct ReducedBlocking {
  WeightedGraph graph;
  StrongBlockingSet blocks;
  std::vector<EdgeId> original_edge;  // new edge id -> id in the input graph
  std::vector<EdgeId> deleted;        // input ids, in deletion order
};

// While some edge lies in >= 4f blocks, delete the most frequent such edge
// (smallest id on ties) together with its blocks. Requires |b| <= f |E(h)|.
ReducedBlocking reduce_block_frequency(const WeightedGraph& h,
                                       const StrongBlockingSet& b,
                                       std::size_t f);

// One block per line: "e1 e2". '#' starts a comment.
void write_blocking_set(std::ostream& out, const StrongBlockingSet& b);
StrongBlockingSet read_blocking_set(std::istream& in,
                                    std::size_t host_edge_count);

}  // namespace ftspan
