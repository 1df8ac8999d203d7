#pragma once

#include <cmath>
#include <cstddef>

namespace doerfler {

/// Double-double accumulator built on the error-free TwoSum transform.
///
/// Sums of up to ~10^9 doubles from a common binade are carried exactly, so the
/// marked-set decisions of all algorithms compare the same real numbers
/// regardless of the order in which they visited the elements.
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr CompensatedSum(double hi, double lo) : hi_(hi), lo_(lo) {}

  void add(double x) noexcept {
    const double s = hi_ + x;
    const double bb = s - hi_;
    const double err = (hi_ - (s - bb)) + (x - bb);
    hi_ = s;
    lo_ += err;
  }

  void add(const CompensatedSum& other) noexcept {
    add(other.hi_);
    lo_ += other.lo_;
  }

  /// Adds count * value with the product split exactly by an FMA.
  void add_multiple(double count, double value) noexcept {
    const double p = count * value;
    const double e = std::fma(count, value, -p);
    add(p);
    add(e);
  }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  double value() const noexcept { return hi_ + lo_; }
  double hi() const noexcept { return hi_; }
  double lo() const noexcept { return lo_; }

  /// Sign of (sum - target). The subtraction hi - target is exact whenever the
  /// two are within a factor of two, which is the only regime where lo matters.
  double difference(double target) const noexcept { return (hi_ - target) + lo_; }

  bool at_least(double target) const noexcept { return difference(target) >= 0.0; }
  bool below(double target) const noexcept { return difference(target) < 0.0; }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

}  // namespace doerfler
