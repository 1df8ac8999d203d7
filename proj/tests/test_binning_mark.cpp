#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "doerfler/binning_mark.hpp"
#include "doerfler/error.hpp"
#include "doerfler/oracle.hpp"
#include "generators.hpp"

using namespace doerfler;

using Indices = std::vector<std::size_t>;

TEST_CASE("compute_K examples") {
  CHECK(compute_K(IndicatorVector{1, 1, 1, 1}, 0.5, 0.5) == 0);
  CHECK(compute_K(IndicatorVector{1, 1e-6}, 0.5, 0.5) == 1);
  CHECK(compute_K(IndicatorVector{1}, 0.9, 0.5) == 3);
  CHECK_THROWS_AS(compute_K(IndicatorVector{1}, 1.0, 0.5), Error);
}

TEST_CASE("bin layout of the worked example") {
  const IndicatorVector x{4, 1, 2, 3};
  const auto layout = bin_layout(x, 0.5, 0.5);
  CHECK(layout.K == 1);
  CHECK(layout.max_value == 4.0);
  REQUIRE(layout.bins.size() == 3);
  CHECK(layout.bins[0] == Indices{0, 3});
  CHECK(layout.bins[1] == Indices{2});  // ratio exactly 1/2 closes bin 1, not bin 0
  CHECK(layout.bins[2] == Indices{1});
  CHECK(binning_mark(x, 0.5, 0.5).marked == Indices{0, 3});
}

TEST_CASE("binning_mark on equal entries") {
  const IndicatorVector x{2, 2, 2, 2};
  CHECK(bin_layout(x, 0.5, 0.5).bins[0] == Indices{0, 1, 2, 3});
  CHECK(binning_mark(x, 0.5, 0.5).marked == Indices{0, 1});
}

TEST_CASE("bin boundaries at exact powers") {
  // Every entry sits exactly on a boundary nu^k with nu = 1/2.
  std::vector<double> v;
  for (int k = 0; k < 30; ++k) v.push_back(std::ldexp(1.0, -k));
  const IndicatorVector x(v);
  const auto layout = bin_layout(x, 0.01, 0.5);
  for (std::size_t k = 0; k <= layout.K; ++k) {
    CHECK(layout.bins[k] == Indices{k});
  }
}

TEST_CASE("bin membership and ordering between bins") {
  testing::Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = testing::draw(rng, testing::Family(trial % 3), testing::between(rng, 1, 600));
    const double theta = testing::kThetas[trial % 7];
    const double nu = 0.5;
    const auto layout = bin_layout(x, theta, nu);
    REQUIRE(layout.bins.size() == layout.K + 2);

    std::vector<int> seen(x.size());
    for (std::size_t k = 0; k < layout.bins.size(); ++k) {
      CHECK(std::is_sorted(layout.bins[k].begin(), layout.bins[k].end()));
      for (std::size_t j : layout.bins[k]) {
        ++seen[j];
        // nu = 1/2, so the powers nu^k are exact.
        const double ratio = x[j] / x.max();
        CHECK(ratio <= std::ldexp(1.0, -static_cast<int>(k)));
        if (k <= layout.K) CHECK(ratio > std::ldexp(1.0, -static_cast<int>(k + 1)));
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));

    for (std::size_t k = 0; k + 1 < layout.bins.size(); ++k) {
      if (layout.bins[k].empty()) continue;
      double smallest = x.max();
      for (std::size_t j : layout.bins[k]) smallest = std::min(smallest, x[j]);
      for (std::size_t later = k + 1; later < layout.bins.size(); ++later) {
        for (std::size_t j : layout.bins[later]) CHECK(x[j] < smallest);
      }
    }
  }
}

TEST_CASE("compute_K is minimal") {
  testing::Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = testing::draw(rng, testing::Family(trial % 3), testing::between(rng, 1, 300));
    const double theta = testing::kThetas[trial % 7];
    const double nu = 0.5;
    const double bound = (1.0 - theta) / theta * goal_value(x, theta) / static_cast<double>(x.size());
    const std::size_t K = compute_K(x, theta, nu);
    CHECK(std::ldexp(x.max(), -static_cast<int>(K + 1)) <= bound);
    if (K > 0) CHECK(std::ldexp(x.max(), -static_cast<int>(K)) > bound);
  }
}

TEST_CASE("binning_mark is quasi-minimal with linear cost") {
  testing::Rng rng(43);
  for (int trial = 0; trial < 600; ++trial) {
    const auto x = testing::draw(rng, testing::Family(trial % 3), testing::between(rng, 1, 500));
    const double theta = testing::kThetas[trial % 7];
    const double nu = std::vector<double>{0.3, 0.5, 0.7}[trial % 3];
    ComparisonCounter counter;
    const auto out = binning_mark(x, theta, nu, &counter);
    const std::size_t nmin = nmin_oracle(x, theta);
    CHECK(satisfies_doerfler(x, theta, out.marked));
    CHECK(out.cardinality() <= ceil_div_exact(nmin, nu));
    const std::size_t K = compute_K(x, theta, nu);
    CHECK(counter.comparisons <= 8 * (x.size() + K));
  }
}

TEST_CASE("binning_mark on uniform instances of size 1000") {
  testing::Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = testing::uniform(rng, 1000);
    CHECK(binning_mark(x, 0.25, 0.5).cardinality() <= 2 * nmin_oracle(x, 0.25));
  }
}
