#include "doerfler/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <new>
#include <ostream>
#include <random>
#include <tuple>

#include "doerfler/binning_mark.hpp"
#include "doerfler/decrement_mark.hpp"
#include "doerfler/error.hpp"
#include "doerfler/quickmark.hpp"
#include "doerfler/sort_mark.hpp"

namespace doerfler {
namespace {

using Clock = std::chrono::steady_clock;

// Runs the core routine of `algorithm` on x. The xstar routine consumes
// `scratch`, which the caller refills before every call.
void run_once(Algorithm algorithm, const IndicatorVector& x, std::vector<double>& scratch,
              double theta, double nu, ComparisonCounter* counter) {
  switch (algorithm) {
    case Algorithm::kSort:
      sort_mark(x, theta, counter);
      break;
    case Algorithm::kDecrement:
      decrement_mark(x, theta, nu, DecrementOptions{false, counter});
      break;
    case Algorithm::kBinning:
      binning_mark(x, theta, nu, counter);
      break;
    case Algorithm::kQuickMark: {
      QuickMarkOptions options;
      options.counter = counter;
      quickmark(x, theta, options);
      break;
    }
    case Algorithm::kXStar:
      xstar_kernel(std::span<double>(scratch), theta, counter);
      break;
  }
}

std::string format_number(double value) {
  char buf[64];
  if (value == static_cast<double>(static_cast<std::uint64_t>(value))) {
    std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(value));
  } else {
    std::snprintf(buf, sizeof buf, "%.3f", value);
  }
  return buf;
}

std::string format_seconds(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", value);
  return buf;
}

std::string format_theta(double theta) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", theta);
  return buf;
}

}  // namespace

std::string_view to_string(Stat stat) noexcept {
  switch (stat) {
    case Stat::kMin:
      return "min";
    case Stat::kAvg:
      return "avg";
    case Stat::kMax:
      return "max";
  }
  return "unknown";
}

std::vector<double> uniform_instance(std::uint64_t seed, std::size_t n, std::size_t run) {
  const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(n), hi(n), lo(run), hi(run)};
  std::mt19937_64 rng(seq);
  std::vector<double> values(n);
  for (double& v : values) v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return values;
}

void validate(const BenchConfig& config) {
  if (config.theta_grid.empty() || config.n_grid.empty() || config.algorithms.empty()) {
    throw Error(ErrorKind::kParameterOutOfRange, "theta grid, N grid and algorithms must be nonempty");
  }
  if (config.runs < 1) throw Error(ErrorKind::kParameterOutOfRange, "runs must be at least 1");
  for (double theta : config.theta_grid) validate_theta_below_one(theta);
  validate_nu(config.nu);
  for (std::size_t n : config.n_grid) {
    if (n < 1) throw Error(ErrorKind::kParameterOutOfRange, "N must be positive");
    if (n > config.max_n) {
      throw Error(ErrorKind::kParameterOutOfRange,
                  "N = " + std::to_string(n) + " exceeds --max-n " + std::to_string(config.max_n));
    }
  }
}

std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* log) {
  validate(config);
  std::vector<BenchRecord> records;
  for (double theta : config.theta_grid) {
    for (std::size_t n : config.n_grid) {
      try {
        for (std::size_t run = 1; run <= config.runs; ++run) {
          const IndicatorVector x(uniform_instance(config.seed, n, run));
          std::vector<double> scratch;
          for (Algorithm algorithm : config.algorithms) {
            scratch.assign(x.values().begin(), x.values().end());
            const auto start = Clock::now();
            run_once(algorithm, x, scratch, theta, config.nu, nullptr);
            const auto stop = Clock::now();

            BenchRecord record{algorithm, n, theta, run,
                               std::chrono::duration<double>(stop - start).count(), 0,
                               config.seed};
            if (config.instrument) {
              ComparisonCounter counter;
              scratch.assign(x.values().begin(), x.values().end());
              run_once(algorithm, x, scratch, theta, config.nu, &counter);
              record.comparisons = counter.comparisons;
            }
            records.push_back(record);
          }
        }
        if (log) *log << "done theta=" << theta << " N=" << n << '\n';
      } catch (const std::bad_alloc&) {
        if (log) *log << "skipped theta=" << theta << " N=" << n << ": allocation failed\n";
      }
    }
  }
  return records;
}

std::vector<CellStat> aggregate(const std::vector<BenchRecord>& records) {
  using Key = std::tuple<Algorithm, std::size_t, double>;
  std::vector<Key> order;
  std::map<Key, std::vector<const BenchRecord*>> cells;
  for (const BenchRecord& r : records) {
    const Key key{r.algorithm, r.N, r.theta};
    auto [it, inserted] = cells.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back(&r);
  }
  std::vector<CellStat> out;
  out.reserve(order.size() * 3);
  for (const Key& key : order) {
    const auto& rs = cells[key];
    double smin = rs.front()->seconds, smax = smin, ssum = 0.0;
    double cmin = static_cast<double>(rs.front()->comparisons), cmax = cmin, csum = 0.0;
    for (const BenchRecord* r : rs) {
      const auto c = static_cast<double>(r->comparisons);
      smin = std::min(smin, r->seconds);
      smax = std::max(smax, r->seconds);
      ssum += r->seconds;
      cmin = std::min(cmin, c);
      cmax = std::max(cmax, c);
      csum += c;
    }
    const auto count = static_cast<double>(rs.size());
    const auto [algorithm, n, theta] = key;
    out.push_back({algorithm, n, theta, Stat::kMin, smin, cmin});
    out.push_back({algorithm, n, theta, Stat::kAvg, ssum / count, csum / count});
    out.push_back({algorithm, n, theta, Stat::kMax, smax, cmax});
  }
  return out;
}

std::string emit_table(const std::vector<BenchRecord>& records, TableFormat format,
                       bool per_element) {
  const std::vector<CellStat> stats = aggregate(records);
  std::string out;
  if (format == TableFormat::kCsv) {
    out += per_element ? "algorithm,N,theta,stat,ns_per_element,comparisons_per_element\n"
                       : "algorithm,N,theta,stat,seconds,comparisons\n";
    for (const CellStat& s : stats) {
      const auto n = static_cast<double>(s.N);
      out += std::string(to_string(s.algorithm)) + ',' + std::to_string(s.N) + ',' +
             format_theta(s.theta) + ',' + std::string(to_string(s.stat)) + ',';
      if (per_element) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.4f,%.4f", s.seconds / n * 1e9, s.comparisons / n);
        out += buf;
      } else {
        out += format_seconds(s.seconds) + ',' + format_number(s.comparisons);
      }
      out += '\n';
    }
    return out;
  }

  // Text layout: one block per statistic, N down, (theta, algorithm) across.
  std::vector<std::size_t> ns;
  std::vector<double> thetas;
  std::vector<Algorithm> algorithms;
  std::map<std::tuple<Stat, std::size_t, double, Algorithm>, double> cell;
  for (const CellStat& s : stats) {
    if (std::find(ns.begin(), ns.end(), s.N) == ns.end()) ns.push_back(s.N);
    if (std::find(thetas.begin(), thetas.end(), s.theta) == thetas.end()) thetas.push_back(s.theta);
    if (std::find(algorithms.begin(), algorithms.end(), s.algorithm) == algorithms.end()) {
      algorithms.push_back(s.algorithm);
    }
    cell[{s.stat, s.N, s.theta, s.algorithm}] =
        per_element ? s.seconds / static_cast<double>(s.N) * 1e9 : s.seconds;
  }
  char buf[64];
  for (Stat stat : {Stat::kMin, Stat::kAvg, Stat::kMax}) {
    out += std::string(to_string(stat)) + (per_element ? " (ns per element)\n" : " (seconds)\n");
    std::snprintf(buf, sizeof buf, "%10s", "N");
    out += buf;
    for (double theta : thetas) {
      for (Algorithm a : algorithms) {
        std::snprintf(buf, sizeof buf, " %14s",
                      (std::string(to_string(a)) + "@" + format_theta(theta)).c_str());
        out += buf;
      }
    }
    out += '\n';
    for (std::size_t n : ns) {
      std::snprintf(buf, sizeof buf, "%10zu", n);
      out += buf;
      for (double theta : thetas) {
        for (Algorithm a : algorithms) {
          const auto it = cell.find({stat, n, theta, a});
          if (it == cell.end()) {
            std::snprintf(buf, sizeof buf, " %14s", "-");
          } else {
            std::snprintf(buf, sizeof buf, " %14.3e", it->second);
          }
          out += buf;
        }
      }
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

}  // namespace doerfler
