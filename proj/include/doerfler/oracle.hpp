#pragma once

// Independent verification machinery for the marking strategies.

#include <cstddef>
#include <cstdint>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

#include "doerfler/core.hpp"

namespace doerfler {

using Rational = boost::multiprecision::cpp_rational;

/// N_min via the sort-based minimal marking.
std::size_t nmin_oracle(const IndicatorVector& x, double theta);

/// N_min by enumerating all 2^N subsets. Requires N <= kExhaustiveLimit.
inline constexpr std::size_t kExhaustiveLimit = 20;
std::size_t nmin_exhaustive(const IndicatorVector& x, double theta);

/// Membership of `candidate` (positions into perm, inside [lower, upper)) in the
/// family of locally minimal sets for goal v:
///   every candidate value >= every non-candidate window value, and
///   sum(candidate) >= v > sum(candidate minus any one member).
bool is_valid_minimal_set(const IndicatorVector& x, std::span<const std::size_t> perm,
                          std::size_t lower, std::size_t upper, double v,
                          std::span<const std::size_t> candidate);

/// Parameters of the instance family on which the decrement strategy marks
/// more than C * N_min indices:
///   x = (1, eps repeated C*R times, delta repeated R-1 times), N = (C+1) R,
///   delta = 1 / ceil(1 / (1 - nu (ceil(1/nu) - 1))),
///   R = ceil((2 - theta) / theta) / delta + 1,
///   eps = min{1, (1 - theta)(1 + ceil((2 - theta)/theta)) / theta} / (C R).
/// delta and eps are exact rationals (theta and nu enter as the exact values of
/// their doubles).
struct CounterexampleSpec {
  std::uint64_t C = 1;
  double theta = 0.5;
  double nu = 0.5;
  Rational delta;
  Rational epsilon;
  std::uint64_t R = 0;
  std::uint64_t N = 0;
  /// Positive integer the emitted vector is multiplied by so that every entry
  /// is an integer and no sum over the instance is rounded; 1 when that is not
  /// possible below 2^53.
  std::uint64_t scale = 1;
};

struct Counterexample {
  IndicatorVector x;
  CounterexampleSpec spec;
};

CounterexampleSpec counterexample_spec(std::uint64_t C, double theta, double nu);
Counterexample gen_counterexample(std::uint64_t C, double theta, double nu);

/// Exact rational value of a finite double.
Rational exact_rational(double value);

}  // namespace doerfler
