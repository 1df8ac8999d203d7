#pragma once

#include <cstddef>
#include <vector>

#include "doerfler/core.hpp"
#include "doerfler/instrumentation.hpp"

namespace doerfler {

/// Indices in descending order of value (ties by ascending index) together
/// with the running sums along that order.
struct SortedPrefix {
  std::vector<std::size_t> order;
  std::vector<double> prefix_sums;  // prefix_sums[k] = sum of the first k+1 values
};

SortedPrefix sorted_prefix(const IndicatorVector& x, ComparisonCounter* counter = nullptr);

/// Minimal marking by full sort: the shortest prefix of the descending order
/// whose sum reaches theta * sum(x). Cardinality equals N_min.
/// theta must lie in (0, 1); use mark() for the theta == 1 dispatch.
MarkingOutcome sort_mark(const IndicatorVector& x, double theta,
                         ComparisonCounter* counter = nullptr);

}  // namespace doerfler
