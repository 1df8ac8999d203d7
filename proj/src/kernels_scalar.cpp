#include <limits>

#include "doerfler/kernels.hpp"

namespace doerfler::kernels::scalar {

CompensatedSum sum(std::span<const double> values) noexcept {
  CompensatedSum acc;
  for (double v : values) acc.add(v);
  return acc;
}

double max_value(std::span<const double> values) noexcept {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : values) m = v > m ? v : m;
  return m;
}

std::size_t count_greater(std::span<const double> values, double threshold) noexcept {
  std::size_t n = 0;
  for (double v : values) n += v > threshold ? 1 : 0;
  return n;
}

}  // namespace doerfler::kernels::scalar
