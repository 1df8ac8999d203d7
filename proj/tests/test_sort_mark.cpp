#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "doerfler/error.hpp"
#include "doerfler/oracle.hpp"
#include "doerfler/sort_mark.hpp"
#include "generators.hpp"

using namespace doerfler;

namespace {

using Indices = std::vector<std::size_t>;

Indices sorted(Indices v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("sort_mark examples") {
  const auto a = sort_mark(IndicatorVector{4, 1, 2, 3}, 0.5);
  CHECK(a.marked == Indices{0, 3});
  CHECK(a.achieved_sum == 7.0);

  // Ties resolve to the lowest indices.
  CHECK(sort_mark(IndicatorVector{2, 2, 2, 2}, 0.5).marked == Indices{0, 1});
  CHECK(sort_mark(IndicatorVector{1, 0, 0, 0}, 0.3).marked == Indices{0});
  CHECK(sort_mark(IndicatorVector{0, 2, 0, 2}, 0.75).marked == Indices{1, 3});
}

TEST_CASE("sort_mark rejects theta outside (0, 1)") {
  CHECK_THROWS_AS(sort_mark(IndicatorVector{1, 2}, 1.0), Error);
  CHECK_THROWS_AS(sort_mark(IndicatorVector{1, 2}, 0.0), Error);
}

TEST_CASE("sorted prefix ordering and sums") {
  const auto p = sorted_prefix(IndicatorVector{1, 3, 3, 0, 2});
  CHECK(p.order == Indices{1, 2, 4, 0, 3});
  CHECK(p.prefix_sums == std::vector<double>{3, 6, 8, 9, 9});
}

TEST_CASE("sort_mark properties") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 600; ++trial) {
    const auto family = testing::Family(trial % 3);
    const auto x = testing::draw(rng, family, testing::between(rng, 1, 400));
    const double theta = testing::kThetas[trial % 7];
    CAPTURE(testing::name(family));
    CAPTURE(theta);
    const auto prefix = sorted_prefix(x);
    const auto out = sort_mark(x, theta);
    const std::size_t n = out.cardinality();
    const double v = goal_value(x, theta);
    REQUIRE(n >= 1);

    for (std::size_t i = 1; i < x.size(); ++i) {
      CHECK(x[prefix.order[i - 1]] >= x[prefix.order[i]]);
      CHECK(prefix.prefix_sums[i - 1] <= prefix.prefix_sums[i]);
      if (x[prefix.order[i - 1]] == x[prefix.order[i]]) CHECK(prefix.order[i - 1] < prefix.order[i]);
    }
    CHECK(satisfies_doerfler(x, theta, out.marked));

    // Shortest prefix: dropping the last member, which is the smallest, falls short.
    CompensatedSum without_last;
    for (std::size_t i = 0; i + 1 < n; ++i) without_last.add(x[out.marked[i]]);
    CHECK(without_last.below(v));

    // Cardinality does not depend on the arrangement of the entries.
    std::vector<double> shuffled(x.values().begin(), x.values().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(sort_mark(IndicatorVector(shuffled), theta).cardinality() == n);
  }
}

TEST_CASE("sort_mark matches exhaustive search on small instances") {
  testing::Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = testing::draw(rng, testing::Family(trial % 3), testing::between(rng, 1, 12));
    for (double theta : {0.1, 0.5, 0.9}) {
      CHECK(sort_mark(x, theta).cardinality() == nmin_exhaustive(x, theta));
    }
  }
}

TEST_CASE("sort_mark counts comparisons") {
  ComparisonCounter counter;
  testing::Rng rng(23);
  const auto x = testing::uniform(rng, 1000);
  const auto counted = sort_mark(x, 0.5, &counter);
  CHECK(counter.comparisons > 1000);
  CHECK(sorted(counted.marked) == sorted(sort_mark(x, 0.5).marked));
}
