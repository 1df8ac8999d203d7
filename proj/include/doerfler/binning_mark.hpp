#pragma once

#include <cstddef>
#include <vector>

#include "doerfler/core.hpp"
#include "doerfler/instrumentation.hpp"

namespace doerfler {

/// Geometric bins B_0..B_{K+1} over the ratios r_j = x_j / max(x):
/// j is in B_k (k <= K) iff nu^(k+1) < r_j <= nu^k; B_{K+1} holds the rest.
/// Within a bin indices are ascending.
struct BinLayout {
  std::size_t K = 0;
  double max_value = 0.0;
  std::vector<std::vector<std::size_t>> bins;  // K + 2 entries
};

/// Minimal K >= 0 with nu^(K+1) * max(x) <= ((1 - theta) / theta) * v / N.
std::size_t compute_K(const IndicatorVector& x, double theta, double nu);

BinLayout bin_layout(const IndicatorVector& x, double theta, double nu,
                     ComparisonCounter* counter = nullptr);

/// Quasi-minimal marking in O(N + K): concatenates the bins in order and
/// returns the shortest prefix reaching theta * sum(x).
/// Guarantees cardinality <= ceil(N_min / nu).
MarkingOutcome binning_mark(const IndicatorVector& x, double theta, double nu,
                            ComparisonCounter* counter = nullptr);

}  // namespace doerfler
