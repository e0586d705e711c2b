#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ftspan/generators.hpp"
#include "ftspan/greedy_spanner.hpp"

namespace ftspan::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudgetRefused = 3;

// Reference spanner size bound with all constants set to 1:
//   odd k:  k^2 f^(1/2 - 1/(2k)) n^(1+1/k) + k f n
//   even k: k^2 f^(1/2)          n^(1+1/k) + k f n
// f = 0 uses f^(...) = 1 in the first term, so the bound degrades to the
// non-faulty k^2 n^(1+1/k).
double size_bound(std::size_t n, std::size_t f, std::size_t k);

struct SweepConfig {
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> f_values;
  std::vector<std::size_t> k_values;
  std::vector<Algorithm> algorithms{Algorithm::exact};
  double average_degree = 8.0;
  WeightMode weights = WeightMode::uniform(1.0, 2.0);
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  std::size_t branch_budget = 0;
};

struct SweepRow {
  std::size_t n = 0;
  std::size_t f = 0;
  std::size_t k = 0;
  Algorithm algorithm = Algorithm::exact;
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  double bound = 0.0;
  double ratio = 0.0;
};

// Trial t at size n uses graph seed `seed + t`, shared by every (f, k,
// algorithm) cell, so rows differing only in f describe the same input.
// Rows come back in (n, trial, k, algorithm, f) order regardless of threads.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// Entry point shared by the ftspan binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace ftspan::cli
