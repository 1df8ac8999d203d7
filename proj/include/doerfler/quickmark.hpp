#pragma once

// Minimal bulk marking in linear time by selection-style divide and conquer.
//
// The reference `quickmark` works on an index permutation and never reorders
// the indicators. Each step picks a pivot in the active window [lower, upper)
// of the permutation, partitions the window three ways (greater / equal /
// smaller than the pivot value) and then either
//   - shrinks to the "greater" block if it alone carries the residual goal,
//   - stops inside the "equal" block if that block completes the goal, or
//   - commits greater + equal blocks and continues on the "smaller" block.
// With the median pivot every step at least halves the window, so the total
// work is bounded by twice the cost of one pass.
//
// `xstar_kernel` is the contiguous variant: it reorders a scratch copy of the
// values with std::nth_element and only reports the threshold x*, the smallest
// marked value, from which `set_from_threshold` rebuilds a minimal set.

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "doerfler/core.hpp"
#include "doerfler/instrumentation.hpp"

namespace doerfler {

struct MedianPivot {};
/// Uniformly random pivot position. Quadratic in the worst case.
struct RandomPivot {
  std::uint64_t seed = 0;
};
/// Pivot at ascending rank floor(q * (m - 1)) of an m-element window.
struct QuantilePivot {
  double q = 0.5;
};
using PivotStrategy = std::variant<MedianPivot, RandomPivot, QuantilePivot>;

/// Validating constructor; q must lie strictly inside (0, 1).
QuantilePivot quantile_pivot(double q);

/// Recursion state: perm is a permutation of 0..N-1, the active window is
/// [lower, upper) and residual_goal is theta * sum(x) minus the mass of
/// perm[0..lower).
struct SelectionState {
  std::vector<std::size_t> perm;
  std::size_t lower = 0;
  std::size_t upper = 0;
  double residual_goal = 0.0;
};

/// Window [lower, upper) after a three-way partition:
///   [lower, greater_end)            values > pivot_value
///   [greater_end, smaller_begin)    values == pivot_value (never empty)
///   [smaller_begin, upper)          values < pivot_value
struct PartitionOutcome {
  std::vector<std::size_t> perm;
  std::size_t greater_end = 0;
  std::size_t smaller_begin = 0;
  double pivot_value = 0.0;
};

struct QuickMarkResult {
  std::vector<std::size_t> perm;
  /// perm[0..n) is a minimal marked set.
  std::size_t n = 0;
  /// Smallest marked value; identical for every minimal set.
  double x_star = 0.0;
  std::size_t iterations = 0;
};

struct QuickMarkOptions {
  PivotStrategy pivot = MedianPivot{};
  /// Re-verify window admissibility, the partition postconditions and the
  /// termination properties on every step; a failure throws
  /// Error{kInvariantViolation}. Costs O(N) per step.
  bool check_invariants = false;
  ComparisonCounter* counter = nullptr;
};

QuickMarkResult quickmark(const IndicatorVector& x, double theta,
                          const QuickMarkOptions& options = {});

/// The marked set perm[0..n) with its achieved sum.
MarkingOutcome marked_set(const IndicatorVector& x, const QuickMarkResult& result);

/// Three-way partition of the state's window around the value at position p.
/// Returns a new permutation that agrees with state.perm outside the window.
PartitionOutcome partition(const IndicatorVector& x, const SelectionState& state,
                           std::size_t p, ComparisonCounter* counter = nullptr);

/// A position p in [lower, upper) holding a median of the window values: at
/// most (upper - lower) / 2 window values are smaller and at most that many
/// are larger. Deterministic and worst-case linear.
std::size_t pivot_median(const IndicatorVector& x, std::span<const std::size_t> perm,
                         std::size_t lower, std::size_t upper,
                         ComparisonCounter* counter = nullptr);

/// A position holding the value of ascending rank floor(q * (m - 1)).
std::size_t pivot_quantile(const IndicatorVector& x, std::span<const std::size_t> perm,
                           std::size_t lower, std::size_t upper, double q,
                           ComparisonCounter* counter = nullptr);

/// Admissibility of a recursion state for the bulk goal theta * sum(x):
///  (a) values before `lower` strictly exceed every value from `lower` on, and
///      values up to `upper` strictly exceed every value after it;
///  (b) 0 < residual_goal <= sum over the window, with residual_goal equal to
///      theta * sum(x) minus the mass before `lower` up to the criterion
///      tolerance.
bool is_admissible(const IndicatorVector& x, double theta, const SelectionState& state);

/// Threshold x* computed on a scratch copy of the indicators, which is
/// reordered in place. The scratch must hold a valid indicator vector.
double xstar_kernel(std::span<double> scratch, double theta,
                    ComparisonCounter* counter = nullptr);

/// Convenience overload working on an internal copy.
double xstar_kernel(const IndicatorVector& x, double theta, ComparisonCounter* counter = nullptr);

/// All indices with x_j > x_star, then the fewest indices with x_j == x_star
/// (lowest first) needed to reach theta * sum(x). Throws
/// Error{kThresholdInconsistent} if x_star cannot be the threshold of a
/// minimal set for (x, theta).
MarkingOutcome set_from_threshold(const IndicatorVector& x, double theta, double x_star);

}  // namespace doerfler
