#include "doerfler/quickmark.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "doerfler/detail/select.hpp"
#include "doerfler/error.hpp"
#include "doerfler/kernels.hpp"

namespace doerfler {
namespace {

using detail::Order;
using detail::Tally;

struct ValueKey {
  std::span<const double> x;
  double operator()(std::size_t i) const noexcept { return x[i]; }
};

// Handles are positions into a permutation.
struct PositionKey {
  std::span<const double> x;
  std::span<const std::size_t> perm;
  double operator()(std::size_t pos) const noexcept { return x[perm[pos]]; }
};

std::size_t quantile_rank(std::size_t m, double q) {
  const auto rank = static_cast<std::size_t>(std::floor(q * static_cast<double>(m - 1)));
  return std::min(rank, m - 1);
}

template <bool Counted>
std::size_t position_of_rank(std::span<const double> x, std::span<const std::size_t> perm,
                             std::size_t lower, std::size_t upper, std::size_t rank,
                             std::vector<std::size_t>& scratch, Tally<Counted>& tally) {
  const std::size_t m = upper - lower;
  scratch.resize(m);
  std::iota(scratch.begin(), scratch.end(), lower);
  return detail::select_rank(std::span<std::size_t>(scratch.data(), m), rank,
                             PositionKey{x, perm}, tally);
}

void validate_window(const IndicatorVector& x, std::span<const std::size_t> perm,
                     std::size_t lower, std::size_t upper) {
  if (perm.size() != x.size()) {
    throw Error(ErrorKind::kInvalidArgument, "permutation length differs from N");
  }
  if (!(lower < upper && upper <= x.size())) {
    throw Error(ErrorKind::kIndexOutOfRange, "window must satisfy lower < upper <= N");
  }
}

// --- invariant checks --------------------------------------------------------

std::optional<std::string> window_order_violation(std::span<const double> x,
                                                  std::span<const std::size_t> perm,
                                                  std::size_t lower, std::size_t upper) {
  const std::size_t n = perm.size();
  auto min_over = [&](std::size_t a, std::size_t b) {
    double m = INFINITY;
    for (std::size_t j = a; j < b; ++j) m = std::min(m, x[perm[j]]);
    return m;
  };
  auto max_over = [&](std::size_t a, std::size_t b) {
    double m = -INFINITY;
    for (std::size_t j = a; j < b; ++j) m = std::max(m, x[perm[j]]);
    return m;
  };
  if (lower > 0 && !(min_over(0, lower) > max_over(lower, n))) {
    return "values before the window do not strictly exceed the rest";
  }
  if (upper < n && !(min_over(0, upper) > max_over(upper, n))) {
    return "values after the window are not strictly smaller than the rest";
  }
  return std::nullopt;
}

std::optional<std::string> goal_violation(const IndicatorVector& x,
                                          std::span<const std::size_t> perm, std::size_t lower,
                                          std::size_t upper, double v, double residual) {
  const double tol = criterion_tolerance(x);
  if (!(residual > 0.0)) return "residual goal is not positive";
  CompensatedSum before;
  for (std::size_t j = 0; j < lower; ++j) before.add(x[perm[j]]);
  if (std::abs(before.difference(v) + residual) > tol) {
    return "residual goal disagrees with the committed mass";
  }
  CompensatedSum window;
  for (std::size_t j = lower; j < upper; ++j) window.add(x[perm[j]]);
  if (window.difference(residual) < -tol) return "window cannot carry the residual goal";
  return std::nullopt;
}

std::optional<std::string> partition_violation(std::span<const double> x,
                                               std::span<const std::size_t> before,
                                               std::span<const std::size_t> after,
                                               std::size_t lower, std::size_t upper,
                                               std::size_t greater_end,
                                               std::size_t smaller_begin, double pivot) {
  if (!(lower <= greater_end && greater_end < smaller_begin && smaller_begin <= upper)) {
    return "partition bounds out of order";
  }
  for (std::size_t j = 0; j < before.size(); ++j) {
    if ((j < lower || j >= upper) && before[j] != after[j]) {
      return "partition touched entries outside the window";
    }
  }
  std::vector<std::size_t> a(before.begin() + lower, before.begin() + upper);
  std::vector<std::size_t> b(after.begin() + lower, after.begin() + upper);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return "partition is not a permutation of the window";
  for (std::size_t j = lower; j < upper; ++j) {
    const double v = x[after[j]];
    const bool ok = j < greater_end ? v > pivot : (j < smaller_begin ? v == pivot : v < pivot);
    if (!ok) return "partition block holds a value on the wrong side of the pivot";
  }
  return std::nullopt;
}

[[noreturn]] void violation(const std::string& what, std::size_t iteration) {
  throw Error(ErrorKind::kInvariantViolation,
              "quickmark step " + std::to_string(iteration) + ": " + what);
}

void check_termination(std::span<const double> x, const QuickMarkResult& r, double v) {
  double min_marked = INFINITY;
  CompensatedSum marked;
  for (std::size_t j = 0; j < r.n; ++j) {
    min_marked = std::min(min_marked, x[r.perm[j]]);
    marked.add(x[r.perm[j]]);
  }
  if (min_marked != r.x_star) violation("pivot value differs from the smallest marked value", r.iterations);
  for (std::size_t j = r.n; j < r.perm.size(); ++j) {
    if (x[r.perm[j]] > r.x_star) violation("an unmarked value exceeds the threshold", r.iterations);
  }
  if (!marked.at_least(v)) violation("marked set misses the goal", r.iterations);
  CompensatedSum without_min = marked;
  without_min.add(-min_marked);
  if (without_min.at_least(v)) violation("marked set is not minimal", r.iterations);
}

// --- reference algorithm -----------------------------------------------------

QuickMarkResult support_result(const IndicatorVector& x) {
  QuickMarkResult r;
  r.perm.resize(x.size());
  std::iota(r.perm.begin(), r.perm.end(), std::size_t{0});
  const auto values = x.values();
  const auto mid = std::stable_partition(r.perm.begin(), r.perm.end(),
                                         [&](std::size_t j) { return values[j] > 0.0; });
  r.n = static_cast<std::size_t>(mid - r.perm.begin());
  r.x_star = INFINITY;
  for (std::size_t j = 0; j < r.n; ++j) r.x_star = std::min(r.x_star, values[r.perm[j]]);
  return r;
}

template <bool Counted>
QuickMarkResult quickmark_impl(const IndicatorVector& x, double v,
                               const QuickMarkOptions& options) {
  Tally<Counted> tally(options.counter);
  const auto values = x.values();
  const std::size_t n_total = values.size();
  const bool check = options.check_invariants;

  QuickMarkResult r;
  r.perm.resize(n_total);
  std::iota(r.perm.begin(), r.perm.end(), std::size_t{0});
  std::span<std::size_t> perm(r.perm);

  std::size_t lower = 0;
  std::size_t upper = n_total;
  CompensatedSum committed;  // mass of perm[0..lower)
  std::vector<std::size_t> scratch;
  std::vector<std::size_t> snapshot;
  std::mt19937_64 rng(std::holds_alternative<RandomPivot>(options.pivot)
                          ? std::get<RandomPivot>(options.pivot).seed
                          : 0);

  for (;;) {
    ++r.iterations;
    if (lower >= upper) violation("empty window", r.iterations);
    if (check) {
      if (auto why = window_order_violation(values, perm, lower, upper)) violation(*why, r.iterations);
      const double residual = -committed.difference(v);
      if (auto why = goal_violation(x, perm, lower, upper, v, residual)) violation(*why, r.iterations);
    }

    const std::size_t m = upper - lower;
    std::size_t p = lower;
    if (std::holds_alternative<MedianPivot>(options.pivot)) {
      p = position_of_rank(values, perm, lower, upper, (m - 1) / 2, scratch, tally);
    } else if (std::holds_alternative<QuantilePivot>(options.pivot)) {
      const double q = std::get<QuantilePivot>(options.pivot).q;
      p = position_of_rank(values, perm, lower, upper, quantile_rank(m, q), scratch, tally);
    } else {
      p = lower + static_cast<std::size_t>(rng() % m);
    }
    const double pivot = values[perm[p]];

    if (check) snapshot.assign(perm.begin(), perm.end());
    const auto [greater_end, smaller_begin] = detail::three_way_partition<Order::kDescending>(
        perm, lower, upper, pivot, ValueKey{values}, tally);
    if (check) {
      if (auto why = partition_violation(values, snapshot, perm, lower, upper, greater_end,
                                         smaller_begin, pivot)) {
        violation(*why, r.iterations);
      }
    }

    CompensatedSum sigma = committed;
    for (std::size_t j = lower; j < greater_end; ++j) sigma.add(values[perm[j]]);
    if (sigma.at_least(v)) {
      upper = greater_end;
      continue;
    }

    const std::size_t equal = smaller_begin - greater_end;
    CompensatedSum with_equal = sigma;
    with_equal.add_multiple(static_cast<double>(equal), pivot);
    if (with_equal.at_least(v)) {
      const auto reaches = [&](std::size_t count) {
        CompensatedSum s = sigma;
        s.add_multiple(static_cast<double>(count), pivot);
        return s.at_least(v);
      };
      const double deficit = -sigma.difference(v);
      std::size_t count = static_cast<std::size_t>(
          std::clamp(std::ceil(deficit / pivot), 1.0, static_cast<double>(equal)));
      while (count > 1 && reaches(count - 1)) --count;
      while (count < equal && !reaches(count)) ++count;
      r.n = greater_end + count;
      r.x_star = pivot;
      if (check) check_termination(values, r, v);
      return r;
    }

    committed = with_equal;
    lower = smaller_begin;
  }
}

template <bool Counted>
double xstar_impl(std::span<double> a, double v, ComparisonCounter* counter) {
  Tally<Counted> tally(counter);
  const auto greater = [&tally](double l, double r) {
    tally.add();
    return l > r;
  };
  std::size_t lo = 0;
  std::size_t hi = a.size();
  CompensatedSum committed;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    // Partitioning by the selection routine itself makes a separate
    // partition pass unnecessary.
    std::nth_element(a.begin() + static_cast<std::ptrdiff_t>(lo),
                     a.begin() + static_cast<std::ptrdiff_t>(mid),
                     a.begin() + static_cast<std::ptrdiff_t>(hi), greater);
    CompensatedSum sigma = committed;
    sigma.add(kernels::sum(a.subspan(lo, mid - lo)));
    if (sigma.at_least(v)) {
      hi = mid;
      continue;
    }
    sigma.add(a[mid]);
    if (sigma.at_least(v)) return a[mid];
    committed = sigma;
    lo = mid + 1;
  }
  throw Error(ErrorKind::kInvariantViolation, "xstar kernel exhausted its window");
}

}  // namespace

QuantilePivot quantile_pivot(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorKind::kParameterOutOfRange, "quantile must lie strictly inside (0, 1)");
  }
  return QuantilePivot{q};
}

QuickMarkResult quickmark(const IndicatorVector& x, double theta, const QuickMarkOptions& options) {
  validate_theta_below_one(theta);
  if (const auto* q = std::get_if<QuantilePivot>(&options.pivot)) quantile_pivot(q->q);
  const CompensatedSum total = total_sum(x);
  const double v = theta * total.value();
  if (total.below(v)) return support_result(x);
  return options.counter ? quickmark_impl<true>(x, v, options)
                         : quickmark_impl<false>(x, v, options);
}

MarkingOutcome marked_set(const IndicatorVector& x, const QuickMarkResult& result) {
  return make_outcome(x, std::vector<std::size_t>(result.perm.begin(),
                                                  result.perm.begin() +
                                                      static_cast<std::ptrdiff_t>(result.n)));
}

PartitionOutcome partition(const IndicatorVector& x, const SelectionState& state, std::size_t p,
                           ComparisonCounter* counter) {
  validate_window(x, state.perm, state.lower, state.upper);
  if (p < state.lower || p >= state.upper) {
    throw Error(ErrorKind::kPivotOutOfRange, "pivot position outside the window");
  }
  PartitionOutcome out;
  out.perm = state.perm;
  out.pivot_value = x[state.perm[p]];
  const auto run = [&](auto& tally) {
    return detail::three_way_partition<Order::kDescending>(
        std::span<std::size_t>(out.perm), state.lower, state.upper, out.pivot_value,
        ValueKey{x.values()}, tally);
  };
  std::pair<std::size_t, std::size_t> bounds;
  if (counter) {
    Tally<true> tally(counter);
    bounds = run(tally);
  } else {
    Tally<false> tally(counter);
    bounds = run(tally);
  }
  out.greater_end = bounds.first;
  out.smaller_begin = bounds.second;
  return out;
}

std::size_t pivot_quantile(const IndicatorVector& x, std::span<const std::size_t> perm,
                           std::size_t lower, std::size_t upper, double q,
                           ComparisonCounter* counter) {
  validate_window(x, perm, lower, upper);
  quantile_pivot(q);
  std::vector<std::size_t> scratch;
  const std::size_t rank = quantile_rank(upper - lower, q);
  if (counter) {
    Tally<true> tally(counter);
    return position_of_rank(x.values(), perm, lower, upper, rank, scratch, tally);
  }
  Tally<false> tally(counter);
  return position_of_rank(x.values(), perm, lower, upper, rank, scratch, tally);
}

std::size_t pivot_median(const IndicatorVector& x, std::span<const std::size_t> perm,
                         std::size_t lower, std::size_t upper, ComparisonCounter* counter) {
  validate_window(x, perm, lower, upper);
  std::vector<std::size_t> scratch;
  const std::size_t rank = (upper - lower - 1) / 2;
  if (counter) {
    Tally<true> tally(counter);
    return position_of_rank(x.values(), perm, lower, upper, rank, scratch, tally);
  }
  Tally<false> tally(counter);
  return position_of_rank(x.values(), perm, lower, upper, rank, scratch, tally);
}

bool is_admissible(const IndicatorVector& x, double theta, const SelectionState& state) {
  validate_window(x, state.perm, state.lower, state.upper);
  const double v = goal_value(x, theta);
  return !window_order_violation(x.values(), state.perm, state.lower, state.upper) &&
         !goal_violation(x, state.perm, state.lower, state.upper, v, state.residual_goal);
}

double xstar_kernel(std::span<double> scratch, double theta, ComparisonCounter* counter) {
  validate_theta_below_one(theta);
  if (scratch.empty()) {
    throw Error(ErrorKind::kInvalidIndicatorVector, "indicator vector is empty");
  }
  const CompensatedSum total = kernels::sum(scratch);
  const double v = theta * total.value();
  if (total.below(v)) {
    double smallest = INFINITY;
    for (double s : scratch) {
      if (s > 0.0) smallest = std::min(smallest, s);
    }
    return smallest;
  }
  return counter ? xstar_impl<true>(scratch, v, counter) : xstar_impl<false>(scratch, v, counter);
}

double xstar_kernel(const IndicatorVector& x, double theta, ComparisonCounter* counter) {
  std::vector<double> scratch(x.values().begin(), x.values().end());
  return xstar_kernel(scratch, theta, counter);
}

MarkingOutcome set_from_threshold(const IndicatorVector& x, double theta, double x_star) {
  const double v = goal_value(x, theta);
  if (!std::isfinite(x_star)) {
    throw Error(ErrorKind::kThresholdInconsistent, "threshold is not finite");
  }
  const auto values = x.values();
  std::vector<std::size_t> marked;
  marked.reserve(kernels::count_greater(values, x_star) + 1);
  CompensatedSum acc;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] > x_star) {
      marked.push_back(j);
      acc.add(values[j]);
    }
  }
  if (acc.at_least(v)) {
    throw Error(ErrorKind::kThresholdInconsistent,
                "entries above the threshold already reach the goal");
  }
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] == x_star) {
      marked.push_back(j);
      acc.add(values[j]);
      if (acc.at_least(v)) return MarkingOutcome{std::move(marked), acc.value()};
    }
  }
  throw Error(ErrorKind::kThresholdInconsistent, "entries at or above the threshold miss the goal");
}

}  // namespace doerfler
