#include "doerfler/decrement_mark.hpp"

#include <cmath>
#include <vector>

namespace doerfler {
namespace {

template <bool Counted>
MarkingOutcome decrement_impl(const IndicatorVector& x, double v, double nu,
                              const DecrementOptions& options) {
  detail::Tally<Counted> tally(options.counter);
  const auto values = x.values();
  const std::size_t n_total = values.size();
  const double max_value = x.max();
  tally.add(n_total > 0 ? n_total - 1 : 0);  // max scan

  const std::size_t sweeps = ceil_reciprocal(nu);
  std::vector<bool> selected(n_total, false);
  std::vector<std::size_t> marked;
  CompensatedSum running;

  for (std::size_t k = 1; k <= sweeps; ++k) {
    // 1 - k nu, with the sign exact; clamp at zero once k nu >= 1.
    const double one_minus = -std::fma(static_cast<double>(k), nu, -1.0);
    const double threshold = one_minus > 0.0 ? one_minus * max_value : 0.0;
    for (std::size_t i = 0; i < n_total; ++i) {
      if (selected[i]) continue;
      tally.add();
      if (values[i] > threshold) {
        selected[i] = true;
        marked.push_back(i);
        running.add(values[i]);
        if (!options.legacy_sweep_termination && running.at_least(v)) {
          return MarkingOutcome{std::move(marked), running.value()};
        }
      }
    }
    if (options.legacy_sweep_termination && running.at_least(v)) break;
  }
  return MarkingOutcome{std::move(marked), running.value()};
}

}  // namespace

MarkingOutcome decrement_mark(const IndicatorVector& x, double theta, double nu,
                              const DecrementOptions& options) {
  validate_theta_below_one(theta);
  validate_nu(nu);
  const CompensatedSum total = total_sum(x);
  const double v = theta * total.value();
  if (total.below(v)) return mark_theta_one(x);
  return options.counter ? decrement_impl<true>(x, v, nu, options)
                         : decrement_impl<false>(x, v, nu, options);
}

}  // namespace doerfler
