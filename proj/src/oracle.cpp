#include "doerfler/oracle.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "doerfler/error.hpp"
#include "doerfler/sort_mark.hpp"

namespace doerfler {
namespace {

using boost::multiprecision::cpp_int;

cpp_int ceil_positive(const Rational& r) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  return (num + den - 1) / den;
}

constexpr std::uint64_t kExactLimit = std::uint64_t{1} << 53;

}  // namespace

Rational exact_rational(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::kInvalidArgument, "value is not finite");
  }
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an integer for every finite double.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational r{cpp_int(scaled)};
  if (exponent >= 0) {
    r *= Rational{cpp_int(1) << exponent};
  } else {
    r /= Rational{cpp_int(1) << -exponent};
  }
  return r;
}

std::size_t nmin_oracle(const IndicatorVector& x, double theta) {
  return sort_mark(x, theta).cardinality();
}

std::size_t nmin_exhaustive(const IndicatorVector& x, double theta) {
  validate_theta_below_one(theta);
  const std::size_t n = x.size();
  if (n > kExhaustiveLimit) {
    throw Error(ErrorKind::kInstanceTooLarge,
                "exhaustive search limited to N <= " + std::to_string(kExhaustiveLimit));
  }
  const double v = goal_value(x, theta);
  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::size_t best = n;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    CompensatedSum acc;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::uint32_t{1} << j)) acc.add(x[j]);
    }
    if (acc.at_least(v)) best = size;
  }
  return best;
}

bool is_valid_minimal_set(const IndicatorVector& x, std::span<const std::size_t> perm,
                          std::size_t lower, std::size_t upper, double v,
                          std::span<const std::size_t> candidate) {
  if (perm.size() != x.size()) {
    throw Error(ErrorKind::kInvalidArgument, "permutation length differs from N");
  }
  if (!(lower < upper && upper <= x.size())) {
    throw Error(ErrorKind::kIndexOutOfRange, "window must satisfy lower < upper <= N");
  }
  std::vector<bool> in_candidate(upper - lower, false);
  for (std::size_t pos : candidate) {
    if (pos < lower || pos >= upper) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "candidate position " + std::to_string(pos) + " outside the window");
    }
    if (in_candidate[pos - lower]) {
      throw Error(ErrorKind::kInvalidArgument, "candidate lists a position twice");
    }
    in_candidate[pos - lower] = true;
  }
  if (candidate.empty()) return false;

  double min_in = INFINITY;
  double max_out = -INFINITY;
  CompensatedSum sum;
  for (std::size_t pos = lower; pos < upper; ++pos) {
    const double value = x[perm[pos]];
    if (in_candidate[pos - lower]) {
      min_in = std::min(min_in, value);
      sum.add(value);
    } else {
      max_out = std::max(max_out, value);
    }
  }
  if (min_in < max_out) return false;
  if (!sum.at_least(v)) return false;
  // Dropping the smallest member leaves the largest remainder.
  CompensatedSum reduced = sum;
  reduced.add(-min_in);
  return reduced.below(v);
}

CounterexampleSpec counterexample_spec(std::uint64_t C, double theta, double nu) {
  if (C < 1) throw Error(ErrorKind::kParameterOutOfRange, "C must be a positive integer");
  validate_theta_below_one(theta);
  validate_nu(nu);

  const Rational th = exact_rational(theta);
  const Rational n = exact_rational(nu);
  const Rational one{1};

  const cpp_int sweeps = ceil_positive(one / n);
  const Rational gap = one - n * Rational{sweeps - 1};
  const cpp_int inv_delta = ceil_positive(one / gap);
  const cpp_int c = ceil_positive((Rational{2} - th) / th);
  const cpp_int R = c * inv_delta + 1;
  const cpp_int N = cpp_int(C + 1) * R;
  if (N >= cpp_int(kExactLimit)) {
    throw Error(ErrorKind::kInstanceTooLarge, "counterexample length overflows");
  }

  CounterexampleSpec spec;
  spec.C = C;
  spec.theta = theta;
  spec.nu = nu;
  spec.delta = Rational{1} / Rational{inv_delta};
  const Rational bound = (one - th) * Rational{1 + c} / th;
  spec.epsilon = (bound < one ? bound : one) / Rational{cpp_int(C) * R};
  spec.R = static_cast<std::uint64_t>(R);
  spec.N = static_cast<std::uint64_t>(N);

  const cpp_int den_eps = boost::multiprecision::denominator(spec.epsilon);
  const cpp_int scale = boost::multiprecision::lcm(den_eps, inv_delta);
  if (scale < cpp_int(kExactLimit)) spec.scale = static_cast<std::uint64_t>(scale);
  return spec;
}

Counterexample gen_counterexample(std::uint64_t C, double theta, double nu) {
  CounterexampleSpec spec = counterexample_spec(C, theta, nu);
  const Rational scale{cpp_int(spec.scale)};
  const auto emit = [&](const Rational& r) {
    return static_cast<double>(r * scale);
  };
  std::vector<double> values;
  values.reserve(spec.N);
  values.push_back(emit(Rational{1}));
  values.insert(values.end(), spec.C * spec.R, emit(spec.epsilon));
  values.insert(values.end(), spec.R - 1, emit(spec.delta));
  return Counterexample{IndicatorVector(std::move(values)), std::move(spec)};
}

}  // namespace doerfler
