#pragma once

// Domain types shared by every marking strategy.
//
// Indices are 0-based throughout the library and its file formats. Indicator
// entries are the summands of the bulk criterion
//
//     theta * sum_{j} x_j  <=  sum_{j in M} x_j ,
//
// i.e. callers holding estimator contributions eta(T) pass eta(T)^2 themselves.

#include <cstddef>
#include <span>
#include <vector>

#include "doerfler/summation.hpp"

namespace doerfler {

/// Nonnegative, finite, not-all-zero vector of refinement indicators.
class IndicatorVector {
 public:
  /// Throws Error{kInvalidIndicatorVector} when the vector is empty, has a
  /// negative or non-finite entry, or is identically zero.
  explicit IndicatorVector(std::vector<double> values);
  IndicatorVector(std::initializer_list<double> values)
      : IndicatorVector(std::vector<double>(values)) {}

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double max() const noexcept { return max_; }

  const std::vector<double>& data() const noexcept { return values_; }

 private:
  std::vector<double> values_;
  double max_ = 0.0;
};

/// Bulk parameter theta in (0, 1] and, for the decrement and binning
/// strategies, the reduction factor nu in (0, 1).
struct MarkingParams {
  double theta = 0.5;
  double nu = 0.5;
};

void validate_theta(double theta);             // (0, 1]
void validate_theta_below_one(double theta);  // (0, 1)
void validate_nu(double nu);                   // (0, 1)

/// A marked index set. `marked` lists distinct indices in the order the
/// producing algorithm selected them.
struct MarkingOutcome {
  std::vector<std::size_t> marked;
  double achieved_sum = 0.0;

  std::size_t cardinality() const noexcept { return marked.size(); }
};

/// Builds an outcome from a list of indices, recomputing the achieved sum.
MarkingOutcome make_outcome(const IndicatorVector& x, std::vector<std::size_t> marked);

/// Compensated sum of all entries.
CompensatedSum total_sum(const IndicatorVector& x) noexcept;

/// v = theta * sum(x), with the sum accumulated in compensated arithmetic.
double goal_value(const IndicatorVector& x, double theta);

/// Absolute slack 4 * N * eps * max(x) used by the verification predicate.
double criterion_tolerance(const IndicatorVector& x) noexcept;

/// True iff sum_{j in marked} x_j >= goal_value(x, theta) - tolerance.
/// Repeated indices count once; an index >= N raises kIndexOutOfRange.
bool satisfies_doerfler(const IndicatorVector& x, double theta,
                        std::span<const std::size_t> marked);

/// theta == 1: the unique minimal set is the support of x.
MarkingOutcome mark_theta_one(const IndicatorVector& x);

/// Smallest integer m >= 1 with m * factor >= count, evaluated exactly.
/// Used for bounds of the form ceil(count / nu).
std::size_t ceil_div_exact(std::size_t count, double factor);

/// Smallest integer k >= 1 with k * nu >= 1, evaluated exactly.
std::size_t ceil_reciprocal(double nu);

}  // namespace doerfler
