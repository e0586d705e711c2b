#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ftspan/generators.hpp"
#include "ftspan/graph.hpp"
#include "oracle.hpp"

namespace testing_util {

inline double as_double(const ftspan::Distance& d) {
  return d.is_infinite() ? oracle::kInf : d.value();
}

inline double as_double(const ftspan::HopCount& d) {
  return d.is_infinite() ? oracle::kInf : static_cast<double>(d.value());
}

// Random graph with n nodes and min(m, C(n,2)) edges.
inline ftspan::WeightedGraph random_graph(std::size_t n, std::size_t m,
                                          bool unit, std::uint64_t seed) {
  const std::size_t pairs = n * (n - 1) / 2;
  return ftspan::gen_random(n, std::min(m, pairs),
                            unit ? ftspan::WeightMode::unit()
                                 : ftspan::WeightMode::uniform(1.0, 10.0),
                            seed);
}

inline std::set<ftspan::EdgeId> to_set(const ftspan::FaultSet& f) {
  return {f.begin(), f.end()};
}

}  // namespace testing_util
