#include "doerfler/core.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "doerfler/error.hpp"
#include "doerfler/kernels.hpp"

namespace doerfler {

IndicatorVector::IndicatorVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorKind::kInvalidIndicatorVector, "indicator vector is empty");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorKind::kInvalidIndicatorVector,
                  "indicator " + std::to_string(i) + " is negative or not finite");
    }
  }
  max_ = kernels::max_value(values_);
  if (!(max_ > 0.0)) {
    throw Error(ErrorKind::kInvalidIndicatorVector, "indicator vector is identically zero");
  }
}

void validate_theta(double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw Error(ErrorKind::kParameterOutOfRange, "theta must lie in (0, 1]");
  }
}

void validate_theta_below_one(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw Error(ErrorKind::kParameterOutOfRange, "theta must lie in (0, 1)");
  }
}

void validate_nu(double nu) {
  if (!(nu > 0.0 && nu < 1.0)) {
    throw Error(ErrorKind::kParameterOutOfRange, "nu must lie in (0, 1)");
  }
}

MarkingOutcome make_outcome(const IndicatorVector& x, std::vector<std::size_t> marked) {
  CompensatedSum acc;
  for (std::size_t j : marked) acc.add(x[j]);
  return MarkingOutcome{std::move(marked), acc.value()};
}

CompensatedSum total_sum(const IndicatorVector& x) noexcept { return kernels::sum(x.values()); }

double goal_value(const IndicatorVector& x, double theta) {
  validate_theta(theta);
  return theta * total_sum(x).value();
}

double criterion_tolerance(const IndicatorVector& x) noexcept {
  return 4.0 * static_cast<double>(x.size()) * std::numeric_limits<double>::epsilon() * x.max();
}

bool satisfies_doerfler(const IndicatorVector& x, double theta,
                        std::span<const std::size_t> marked) {
  const double v = goal_value(x, theta);
  std::vector<bool> seen(x.size(), false);
  CompensatedSum acc;
  for (std::size_t j : marked) {
    if (j >= x.size()) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "marked index " + std::to_string(j) + " outside [0, " +
                      std::to_string(x.size()) + ")");
    }
    if (seen[j]) continue;
    seen[j] = true;
    acc.add(x[j]);
  }
  return acc.at_least(v - criterion_tolerance(x));
}

MarkingOutcome mark_theta_one(const IndicatorVector& x) {
  const auto values = x.values();
  std::vector<std::size_t> marked;
  marked.reserve(kernels::count_greater(values, 0.0));
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] > 0.0) marked.push_back(j);
  }
  return make_outcome(x, std::move(marked));
}

std::size_t ceil_div_exact(std::size_t count, double factor) {
  if (!(factor > 0.0)) {
    throw Error(ErrorKind::kParameterOutOfRange, "factor must be positive");
  }
  const double target = static_cast<double>(count);
  auto m = static_cast<std::size_t>(std::ceil(target / factor));
  if (m == 0) m = 1;
  // fma gives the exact sign of m * factor - count.
  while (m > 1 && std::fma(static_cast<double>(m - 1), factor, -target) >= 0.0) --m;
  while (std::fma(static_cast<double>(m), factor, -target) < 0.0) ++m;
  return m;
}

std::size_t ceil_reciprocal(double nu) { return ceil_div_exact(1, nu); }

}  // namespace doerfler
