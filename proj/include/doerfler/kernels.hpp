#pragma once

// Data-parallel reductions over contiguous indicator arrays.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. `kernels::active()` picks the widest variant the running CPU
// supports once per process; the environment variable DOERFLER_ISA=scalar
// forces the reference path. Both variants are exercised against each other
// in tests/test_kernels.cpp.

#include <cstddef>
#include <span>
#include <string_view>

#include "doerfler/summation.hpp"

namespace doerfler::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  /// Compensated sum of all entries.
  CompensatedSum (*sum)(std::span<const double>) noexcept;
  /// Largest entry; -infinity for an empty span.
  double (*max_value)(std::span<const double>) noexcept;
  /// Number of entries strictly greater than threshold.
  std::size_t (*count_greater)(std::span<const double>, double threshold) noexcept;
};

namespace scalar {
CompensatedSum sum(std::span<const double> values) noexcept;
double max_value(std::span<const double> values) noexcept;
std::size_t count_greater(std::span<const double> values, double threshold) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define DOERFLER_HAVE_AVX2_KERNELS 1
namespace avx2 {
CompensatedSum sum(std::span<const double> values) noexcept;
double max_value(std::span<const double> values) noexcept;
std::size_t count_greater(std::span<const double> values, double threshold) noexcept;
}  // namespace avx2
#else
#define DOERFLER_HAVE_AVX2_KERNELS 0
#endif

/// True when the CPU can run the AVX2 table.
bool avx2_supported() noexcept;

const KernelTable& scalar_table() noexcept;
const KernelTable& active() noexcept;

inline CompensatedSum sum(std::span<const double> values) noexcept {
  return active().sum(values);
}
inline double max_value(std::span<const double> values) noexcept {
  return active().max_value(values);
}
inline std::size_t count_greater(std::span<const double> values, double threshold) noexcept {
  return active().count_greater(values, threshold);
}

}  // namespace doerfler::kernels
