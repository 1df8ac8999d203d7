#pragma once

#include <cstdint>

namespace doerfler {

/// Tally of element-value comparisons. Algorithms accept a nullable pointer;
/// a null counter selects the uninstrumented code path.
struct ComparisonCounter {
  std::uint64_t comparisons = 0;

  void add(std::uint64_t n = 1) noexcept { comparisons += n; }
  void reset() noexcept { comparisons = 0; }
};

namespace detail {

// Compile-time switch so that the timed path carries no counting code.
template <bool Counted>
struct Tally;

template <>
struct Tally<false> {
  explicit Tally(ComparisonCounter*) noexcept {}
  void add(std::uint64_t = 1) noexcept {}
};

template <>
struct Tally<true> {
  explicit Tally(ComparisonCounter* c) noexcept : counter(c) {}
  void add(std::uint64_t n = 1) noexcept { counter->comparisons += n; }
  ComparisonCounter* counter;
};

}  // namespace detail
}  // namespace doerfler
