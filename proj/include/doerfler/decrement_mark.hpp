#pragma once

#include "doerfler/core.hpp"
#include "doerfler/instrumentation.hpp"

namespace doerfler {

struct DecrementOptions {
  /// Check the stopping rule only after a complete sweep instead of after every
  /// selection. This reproduces the historical formulation, which marks every
  /// index of a constant vector; it is kept for demonstration only.
  bool legacy_sweep_termination = false;
  ComparisonCounter* counter = nullptr;
};

/// Sorting-free marking by linearly decreasing thresholds (1 - k nu) max(x),
/// k = 1, ..., ceil(1/nu). Each sweep scans indices in ascending order and
/// selects unselected entries strictly above the threshold; it stops as soon
/// as the selected mass reaches theta * sum(x). Costs O(N / nu) but is not
/// quasi-minimal.
MarkingOutcome decrement_mark(const IndicatorVector& x, double theta, double nu,
                              const DecrementOptions& options = {});

}  // namespace doerfler
