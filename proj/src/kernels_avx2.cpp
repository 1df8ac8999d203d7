// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <limits>

#include "doerfler/kernels.hpp"

namespace doerfler::kernels::avx2 {
namespace {

// Lane-wise TwoSum: (s, e) with s + e == a + b exactly.
inline void two_sum(__m256d& hi, __m256d& lo, __m256d x) noexcept {
  const __m256d s = _mm256_add_pd(hi, x);
  const __m256d bb = _mm256_sub_pd(s, hi);
  const __m256d err = _mm256_add_pd(_mm256_sub_pd(hi, _mm256_sub_pd(s, bb)), _mm256_sub_pd(x, bb));
  hi = s;
  lo = _mm256_add_pd(lo, err);
}

}  // namespace

CompensatedSum sum(std::span<const double> values) noexcept {
  const double* p = values.data();
  const std::size_t n = values.size();
  __m256d hi0 = _mm256_setzero_pd(), lo0 = _mm256_setzero_pd();
  __m256d hi1 = _mm256_setzero_pd(), lo1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    two_sum(hi0, lo0, _mm256_loadu_pd(p + i));
    two_sum(hi1, lo1, _mm256_loadu_pd(p + i + 4));
  }
  if (i + 4 <= n) {
    two_sum(hi0, lo0, _mm256_loadu_pd(p + i));
    i += 4;
  }
  alignas(32) double h[8], l[8];
  _mm256_store_pd(h, hi0);
  _mm256_store_pd(h + 4, hi1);
  _mm256_store_pd(l, lo0);
  _mm256_store_pd(l + 4, lo1);

  CompensatedSum acc;
  for (int k = 0; k < 8; ++k) acc.add(h[k]);
  for (; i < n; ++i) acc.add(p[i]);
  double lo_total = 0.0;
  for (int k = 0; k < 8; ++k) lo_total += l[k];
  acc.add(CompensatedSum(0.0, lo_total));
  return acc;
}

double max_value(std::span<const double> values) noexcept {
  const double* p = values.data();
  const std::size_t n = values.size();
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  __m256d m0 = _mm256_set1_pd(kNegInf), m1 = m0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    m0 = _mm256_max_pd(m0, _mm256_loadu_pd(p + i));
    m1 = _mm256_max_pd(m1, _mm256_loadu_pd(p + i + 4));
  }
  m0 = _mm256_max_pd(m0, m1);
  alignas(32) double m[4];
  _mm256_store_pd(m, m0);
  double best = kNegInf;
  for (double v : m) best = v > best ? v : best;
  for (; i < n; ++i) best = p[i] > best ? p[i] : best;
  return best;
}

std::size_t count_greater(std::span<const double> values, double threshold) noexcept {
  const double* p = values.data();
  const std::size_t n = values.size();
  const __m256d t = _mm256_set1_pd(threshold);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d gt = _mm256_cmp_pd(_mm256_loadu_pd(p + i), t, _CMP_GT_OQ);
    count += static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_pd(gt)));
  }
  for (; i < n; ++i) count += p[i] > threshold ? 1 : 0;
  return count;
}

}  // namespace doerfler::kernels::avx2
