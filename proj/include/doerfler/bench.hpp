#pragma once

// Timing harness: seeded uniform(0,1) instances, every selected algorithm
// timed on a fresh copy, min/avg/max aggregation per (algorithm, N, theta).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "doerfler/marking.hpp"

namespace doerfler {

struct BenchConfig {
  std::vector<double> theta_grid{0.1, 0.25, 0.5, 0.75, 0.9};
  std::vector<std::size_t> n_grid{1'000, 10'000, 100'000, 1'000'000, 10'000'000};
  std::size_t runs = 30;
  std::uint64_t seed = 1;
  std::vector<Algorithm> algorithms{Algorithm::kSort, Algorithm::kXStar};
  double nu = 0.5;
  /// Sizes above this are rejected; 10^7 doubles take 80 MB.
  std::size_t max_n = 10'000'000;
  /// Adds an untimed counting pass per run to fill BenchRecord::comparisons.
  bool instrument = false;
};

struct BenchRecord {
  Algorithm algorithm = Algorithm::kSort;
  std::size_t N = 0;
  double theta = 0.0;
  std::size_t run = 0;  // 1-based
  double seconds = 0.0;
  std::uint64_t comparisons = 0;  // 0 unless instrumented
  std::uint64_t seed = 0;
};

enum class Stat { kMin, kAvg, kMax };
std::string_view to_string(Stat stat) noexcept;

struct CellStat {
  Algorithm algorithm = Algorithm::kSort;
  std::size_t N = 0;
  double theta = 0.0;
  Stat stat = Stat::kMin;
  double seconds = 0.0;
  double comparisons = 0.0;
};

/// Instance for (seed, N, run): std::mt19937_64 seeded through std::seed_seq
/// with the 32-bit words of seed, N and run; each draw maps to
/// (word >> 11) * 2^-53 in [0, 1). Identical on every conforming platform.
std::vector<double> uniform_instance(std::uint64_t seed, std::size_t n, std::size_t run);

void validate(const BenchConfig& config);

/// Progress and skipped cells are reported on `log` when non-null.
std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* log = nullptr);

/// min, avg, max rows per cell in first-appearance order.
std::vector<CellStat> aggregate(const std::vector<BenchRecord>& records);

enum class TableFormat { kCsv, kTable };

/// CSV: header `algorithm,N,theta,stat,seconds,comparisons`. With per_element
/// the two value columns become ns_per_element and comparisons_per_element.
/// kTable lays out one block per stat with N as rows and theta x algorithm as
/// columns.
std::string emit_table(const std::vector<BenchRecord>& records, TableFormat format,
                       bool per_element = false);

}  // namespace doerfler
