#include <cmath>
#include <vector>

#include "doctest.h"
#include "doerfler/decrement_mark.hpp"
#include "doerfler/error.hpp"
#include "doerfler/oracle.hpp"
#include "generators.hpp"

using namespace doerfler;

using Indices = std::vector<std::size_t>;

TEST_CASE("decrement_mark worked example") {
  // Sweep 1 has threshold 2: index 0 is taken, index 2 (value 2) is not strictly
  // above it, index 3 completes the goal.
  const auto out = decrement_mark(IndicatorVector{4, 1, 2, 3}, 0.5, 0.5);
  CHECK(out.marked == Indices{0, 3});
  CHECK(out.achieved_sum == 7.0);
}

TEST_CASE("decrement_mark on the counterexample instance") {
  const auto ce = gen_counterexample(1, 0.5, 0.5);
  CHECK(decrement_mark(ce.x, 0.5, 0.5).cardinality() == 9);
  CHECK(nmin_oracle(ce.x, 0.5) == 4);
}

TEST_CASE("decrement_mark on constant vectors") {
  for (std::size_t n = 2; n <= 40; ++n) {
    std::vector<double> v(n, 1.0);
    const IndicatorVector x(v);
    for (double theta : {0.05, 0.3, 0.5, 0.77}) {
      if (theta > static_cast<double>(n - 1) / static_cast<double>(n)) continue;
      const auto expected = static_cast<std::size_t>(std::ceil(theta * static_cast<double>(n)));
      CHECK(decrement_mark(x, theta, 0.5).cardinality() == expected);
    }
  }
}

TEST_CASE("legacy sweep termination marks every index of a constant vector") {
  const IndicatorVector x(std::vector<double>(10, 3.0));
  DecrementOptions legacy;
  legacy.legacy_sweep_termination = true;
  CHECK(decrement_mark(x, 0.5, 0.5, legacy).cardinality() == 10);
  CHECK(decrement_mark(x, 0.5, 0.5).cardinality() == 5);
}

TEST_CASE("decrement_mark parameters") {
  const IndicatorVector x{1, 2};
  CHECK_THROWS_AS(decrement_mark(x, 1.0, 0.5), Error);
  CHECK_THROWS_AS(decrement_mark(x, 0.5, 0.0), Error);
  CHECK_THROWS_AS(decrement_mark(x, 0.5, 1.0), Error);
}

TEST_CASE("decrement_mark satisfies the criterion within O(N / nu) comparisons") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 600; ++trial) {
    const auto x = testing::draw(rng, testing::Family(trial % 3), testing::between(rng, 1, 500));
    const double theta = testing::kThetas[trial % 7];
    const double nu = std::vector<double>{0.1, 0.3, 0.5, 0.7, 0.95}[trial % 5];
    ComparisonCounter counter;
    DecrementOptions options;
    options.counter = &counter;
    const auto out = decrement_mark(x, theta, nu, options);
    CHECK(satisfies_doerfler(x, theta, out.marked));
    CHECK(out.cardinality() >= nmin_oracle(x, theta));
    CHECK(counter.comparisons <= 4 * x.size() * ceil_reciprocal(nu));

    std::vector<bool> seen(x.size());
    for (std::size_t j : out.marked) {
      CHECK_FALSE(seen[j]);
      seen[j] = true;
    }
    CHECK(decrement_mark(x, theta, nu).marked == out.marked);
  }
}
