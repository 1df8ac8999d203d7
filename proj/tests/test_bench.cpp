#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "doerfler/bench.hpp"
#include "doerfler/error.hpp"

using namespace doerfler;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

BenchConfig small_config() {
  BenchConfig c;
  c.n_grid = {1000};
  c.runs = 3;
  c.algorithms = {Algorithm::kSort, Algorithm::kQuickMark};
  return c;
}

}  // namespace

TEST_CASE("uniform instances are reproducible") {
  CHECK(uniform_instance(1, 1000, 1) == uniform_instance(1, 1000, 1));
  CHECK(uniform_instance(1, 1000, 1) != uniform_instance(1, 1000, 2));
  CHECK(uniform_instance(1, 1000, 1) != uniform_instance(2, 1000, 1));
  const auto v = uniform_instance(9, 5000, 3);
  CHECK(std::all_of(v.begin(), v.end(), [](double d) { return d >= 0.0 && d < 1.0; }));
}

TEST_CASE("record count and fields") {
  const auto records = run_bench(small_config());
  CHECK(records.size() == 2 * 5 * 3);
  for (const auto& r : records) {
    CHECK(r.seconds >= 0.0);
    CHECK(r.run >= 1);
    CHECK(r.run <= 3);
    CHECK(r.N == 1000);
    CHECK(r.seed == 1);
    CHECK(r.comparisons == 0);
  }
}

TEST_CASE("instrumented runs are deterministic") {
  BenchConfig c = small_config();
  c.instrument = true;
  c.algorithms = {Algorithm::kSort, Algorithm::kDecrement, Algorithm::kBinning,
                  Algorithm::kQuickMark, Algorithm::kXStar};
  const auto a = run_bench(c);
  const auto b = run_bench(c);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].comparisons > 0);
    CHECK(a[i].comparisons == b[i].comparisons);
  }
}

TEST_CASE("quickmark cost does not depend on theta") {
  BenchConfig c;
  c.n_grid = {20000};
  c.runs = 2;
  c.algorithms = {Algorithm::kQuickMark};
  c.instrument = true;
  const auto records = run_bench(c);
  double lo = 1e300;
  double hi = 0.0;
  for (const auto& cell : aggregate(records)) {
    if (cell.stat != Stat::kAvg) continue;
    lo = std::min(lo, cell.comparisons);
    hi = std::max(hi, cell.comparisons);
  }
  CHECK(hi <= 1.25 * lo);
}

TEST_CASE("aggregation") {
  const auto records = run_bench(small_config());
  const auto stats = aggregate(records);
  REQUIRE(stats.size() == 2 * 5 * 3);
  for (std::size_t i = 0; i < stats.size(); i += 3) {
    CHECK(stats[i].stat == Stat::kMin);
    CHECK(stats[i + 1].stat == Stat::kAvg);
    CHECK(stats[i + 2].stat == Stat::kMax);
    CHECK(stats[i].seconds <= stats[i + 1].seconds);
    CHECK(stats[i + 1].seconds <= stats[i + 2].seconds);
  }
  CHECK(stats[0].algorithm == Algorithm::kSort);
  CHECK(stats[3].algorithm == Algorithm::kQuickMark);
}

TEST_CASE("csv output") {
  std::vector<BenchRecord> one_cell;
  for (std::size_t run = 1; run <= 30; ++run) {
    one_cell.push_back({Algorithm::kSort, 1000, 0.5, run, 1e-3 * static_cast<double>(run), 10 * run, 1});
  }
  auto rows = lines(emit_table(one_cell, TableFormat::kCsv));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "algorithm,N,theta,stat,seconds,comparisons");
  CHECK(rows[1].rfind("sort,1000,0.5,min,", 0) == 0);
  CHECK(rows[2].rfind("sort,1000,0.5,avg,", 0) == 0);
  CHECK(rows[3].rfind("sort,1000,0.5,max,", 0) == 0);

  auto two = one_cell;
  for (auto r : one_cell) {
    r.algorithm = Algorithm::kXStar;
    two.push_back(r);
  }
  CHECK(lines(emit_table(two, TableFormat::kCsv)).size() == 7);

  rows = lines(emit_table(one_cell, TableFormat::kCsv, true));
  CHECK(rows[0] == "algorithm,N,theta,stat,ns_per_element,comparisons_per_element");
  CHECK(rows[1] == "sort,1000,0.5,min,1000.0000,0.0100");

  const std::string table = emit_table(two, TableFormat::kTable);
  CHECK(table.find("sort@0.5") != std::string::npos);
  CHECK(table.find("xstar@0.5") != std::string::npos);
  CHECK(table.find("avg") != std::string::npos);
}

TEST_CASE("configuration errors") {
  BenchConfig c = small_config();
  c.runs = 0;
  CHECK_THROWS_AS(validate(c), Error);
  c = small_config();
  c.n_grid = {20'000'000};
  CHECK_THROWS_AS(validate(c), Error);
  c.max_n = 30'000'000;
  CHECK_NOTHROW(validate(c));
  c = small_config();
  c.theta_grid = {1.0};
  CHECK_THROWS_AS(validate(c), Error);
  c = small_config();
  c.algorithms.clear();
  CHECK_THROWS_AS(validate(c), Error);
}
