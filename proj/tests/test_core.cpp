#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "doerfler/core.hpp"
#include "doerfler/error.hpp"
#include "generators.hpp"

using namespace doerfler;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no doerfler::Error thrown");
  return ErrorKind::kInvalidArgument;
}

}  // namespace

TEST_CASE("indicator vector rejects invalid input") {
  CHECK(kind_of([] { IndicatorVector(std::vector<double>{}); }) == ErrorKind::kInvalidIndicatorVector);
  CHECK(kind_of([] { IndicatorVector({1.0, -0.5}); }) == ErrorKind::kInvalidIndicatorVector);
  CHECK(kind_of([] { IndicatorVector({0.0, 0.0, 0.0}); }) == ErrorKind::kInvalidIndicatorVector);
  CHECK(kind_of([] { IndicatorVector({1.0, std::nan("")}); }) == ErrorKind::kInvalidIndicatorVector);
  CHECK(kind_of([] {
          IndicatorVector({1.0, std::numeric_limits<double>::infinity()});
        }) == ErrorKind::kInvalidIndicatorVector);

  const IndicatorVector x{0.0, 3.0, 1.5};
  CHECK(x.size() == 3);
  CHECK(x.max() == 3.0);
  CHECK(x[2] == 1.5);
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(validate_theta(1.0));
  CHECK_NOTHROW(validate_theta(1e-300));
  CHECK(kind_of([] { validate_theta(0.0); }) == ErrorKind::kParameterOutOfRange);
  CHECK(kind_of([] { validate_theta(1.0000001); }) == ErrorKind::kParameterOutOfRange);
  CHECK(kind_of([] { validate_theta(std::nan("")); }) == ErrorKind::kParameterOutOfRange);
  CHECK(kind_of([] { validate_theta_below_one(1.0); }) == ErrorKind::kParameterOutOfRange);
  CHECK(kind_of([] { validate_nu(0.0); }) == ErrorKind::kParameterOutOfRange);
  CHECK(kind_of([] { validate_nu(1.0); }) == ErrorKind::kParameterOutOfRange);
  CHECK_NOTHROW(validate_nu(0.5));
}

TEST_CASE("goal value") {
  CHECK(goal_value(IndicatorVector{4, 1, 2, 3}, 0.5) == 5.0);
  CHECK(goal_value(IndicatorVector{1, 0, 0}, 0.9) == 0.9);
  CHECK(kind_of([] { goal_value(IndicatorVector{1.0}, 1.5); }) == ErrorKind::kParameterOutOfRange);
}

TEST_CASE("goal value is positively homogeneous") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = testing::uniform(rng, testing::between(rng, 1, 300));
    const double c = std::ldexp(testing::unit(rng) + 0.25, static_cast<int>(testing::between(rng, 0, 40)) - 20);
    std::vector<double> scaled(x.values().begin(), x.values().end());
    for (double& d : scaled) d *= c;
    const double a = goal_value(IndicatorVector(scaled), 0.37);
    const double b = c * goal_value(x, 0.37);
    CHECK(std::abs(a - b) <= 1e-12 * b);
  }
}

TEST_CASE("summation does not depend on element order") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(testing::between(rng, 1, 2000));
    for (double& d : v) d = std::ldexp(testing::unit(rng), -static_cast<int>(testing::between(rng, 0, 30)));
    v[0] = 1.0;
    const double forward = goal_value(IndicatorVector(v), 0.5);
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(goal_value(IndicatorVector(v), 0.5) == forward);
  }
}

TEST_CASE("satisfies_doerfler") {
  const IndicatorVector x{4, 1, 2, 3};
  const std::vector<std::size_t> m14{0, 3};
  const std::vector<std::size_t> m1{0};
  const std::vector<std::size_t> all{0, 1, 2, 3};
  const std::vector<std::size_t> repeated{0, 0, 0};
  const std::vector<std::size_t> bad{0, 4};
  CHECK(satisfies_doerfler(x, 0.5, m14));
  CHECK_FALSE(satisfies_doerfler(x, 0.5, m1));
  CHECK(satisfies_doerfler(x, 0.999, all));
  CHECK_FALSE(satisfies_doerfler(x, 0.5, repeated));
  CHECK(kind_of([&] { satisfies_doerfler(x, 0.5, bad); }) == ErrorKind::kIndexOutOfRange);
}

TEST_CASE("full index set always satisfies the criterion") {
  testing::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = testing::draw(rng, testing::Family(trial % 3), testing::between(rng, 1, 200));
    std::vector<std::size_t> all(x.size());
    std::iota(all.begin(), all.end(), 0);
    for (double theta : testing::kThetas) CHECK(satisfies_doerfler(x, theta, all));
    CHECK(satisfies_doerfler(x, 1.0, all));
  }
}

TEST_CASE("theta one marks the support") {
  CHECK(mark_theta_one(IndicatorVector{1, 0, 2}).marked == std::vector<std::size_t>{0, 2});
  CHECK(mark_theta_one(IndicatorVector{5}).marked == std::vector<std::size_t>{0});
  const auto m = mark_theta_one(IndicatorVector{0, 0, 7, 0});
  CHECK(m.marked == std::vector<std::size_t>{2});
  CHECK(m.achieved_sum == 7.0);
}

TEST_CASE("make_outcome recomputes the sum") {
  const IndicatorVector x{0.1, 0.2, 0.3};
  const auto m = make_outcome(x, {2, 0});
  CHECK(m.cardinality() == 2);
  CHECK(m.achieved_sum == doctest::Approx(0.4));
}

TEST_CASE("exact ceilings") {
  CHECK(ceil_reciprocal(0.5) == 2);
  CHECK(ceil_reciprocal(0.3) == 4);
  CHECK(ceil_reciprocal(0.7) == 2);
  CHECK(ceil_reciprocal(0.25) == 4);
  CHECK(ceil_reciprocal(0.1) == 10);  // double(0.1) > 1/10
  CHECK(ceil_reciprocal(1.0 / 3.0) == 4);  // double(1/3) < 1/3
  CHECK(ceil_div_exact(3, 0.5) == 6);
  CHECK(ceil_div_exact(7, 0.7) == 11);  // double(0.7) < 7/10
  CHECK(ceil_div_exact(7, 0.5) == 14);
  CHECK(ceil_div_exact(1, 0.3) == 4);
  CHECK(ceil_div_exact(0, 0.3) == 1);
}
