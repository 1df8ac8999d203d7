#pragma once

#include <optional>
#include <string_view>

#include "doerfler/core.hpp"
#include "doerfler/instrumentation.hpp"
#include "doerfler/quickmark.hpp"

namespace doerfler {

enum class Algorithm { kSort, kDecrement, kBinning, kQuickMark, kXStar };

std::string_view to_string(Algorithm algorithm) noexcept;
/// Accepts the CLI names sort, decrement, binning, quickmark, xstar.
Algorithm parse_algorithm(std::string_view name);

struct MarkOptions {
  PivotStrategy pivot = MedianPivot{};
  ComparisonCounter* counter = nullptr;
};

struct MarkReport {
  MarkingOutcome outcome;
  double goal = 0.0;
  /// Threshold, reported by quickmark and xstar.
  std::optional<double> x_star;
};

/// Runs one strategy; theta == 1 is answered by mark_theta_one for every
/// strategy.
MarkReport mark(const IndicatorVector& x, Algorithm algorithm, const MarkingParams& params,
                const MarkOptions& options = {});

}  // namespace doerfler
