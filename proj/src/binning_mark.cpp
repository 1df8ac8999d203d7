#include "doerfler/binning_mark.hpp"

#include <algorithm>
#include <cmath>

namespace doerfler {
namespace {

struct Thresholds {
  std::size_t K = 0;
  std::vector<double> powers;  // powers[k] = nu^k by repeated multiplication, k = 0..K+1
};

template <bool Counted>
Thresholds thresholds(const IndicatorVector& x, double v, double theta, double nu,
                      detail::Tally<Counted>& tally) {
  const double bound = (1.0 - theta) / theta * v / static_cast<double>(x.size());
  Thresholds t;
  t.powers.push_back(1.0);
  t.powers.push_back(nu);
  double scaled = nu * x.max();
  tally.add();
  while (scaled > bound) {
    scaled *= nu;
    t.powers.push_back(t.powers.back() * nu);
    ++t.K;
    tally.add();
  }
  return t;
}

// Bin index in 0..K+1 for a ratio, located by a logarithmic guess and then
// corrected against the exact power table so boundaries follow the table.
template <bool Counted>
std::size_t bin_of(double ratio, const Thresholds& t, double log_nu,
                   detail::Tally<Counted>& tally) {
  const std::size_t tail = t.K + 1;
  std::size_t k = tail;
  if (ratio > 0.0) {
    const double guess = std::floor(std::log(ratio) / log_nu);
    k = guess <= 0.0 ? 0 : std::min<std::size_t>(tail, static_cast<std::size_t>(guess));
  }
  // Invariant sought: ratio <= powers[k] and (k == tail or ratio > powers[k + 1]).
  while (k > 0 && (tally.add(), ratio > t.powers[k])) --k;
  while (k < tail && (tally.add(), ratio <= t.powers[k + 1])) ++k;
  return k;
}

template <bool Counted>
BinLayout layout_impl(const IndicatorVector& x, double v, double theta, double nu,
                      ComparisonCounter* counter) {
  detail::Tally<Counted> tally(counter);
  tally.add(x.size() - 1);  // max scan
  const Thresholds t = thresholds(x, v, theta, nu, tally);
  const double log_nu = std::log(nu);

  BinLayout layout;
  layout.K = t.K;
  layout.max_value = x.max();
  layout.bins.resize(t.K + 2);
  const auto values = x.values();
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double ratio = values[j] / layout.max_value;
    layout.bins[bin_of(ratio, t, log_nu, tally)].push_back(j);
  }
  return layout;
}

}  // namespace

std::size_t compute_K(const IndicatorVector& x, double theta, double nu) {
  validate_theta_below_one(theta);
  validate_nu(nu);
  detail::Tally<false> tally(nullptr);
  return thresholds(x, goal_value(x, theta), theta, nu, tally).K;
}

BinLayout bin_layout(const IndicatorVector& x, double theta, double nu,
                     ComparisonCounter* counter) {
  validate_theta_below_one(theta);
  validate_nu(nu);
  const double v = goal_value(x, theta);
  return counter ? layout_impl<true>(x, v, theta, nu, counter)
                 : layout_impl<false>(x, v, theta, nu, counter);
}

MarkingOutcome binning_mark(const IndicatorVector& x, double theta, double nu,
                            ComparisonCounter* counter) {
  validate_theta_below_one(theta);
  validate_nu(nu);
  const CompensatedSum total = total_sum(x);
  const double v = theta * total.value();
  if (total.below(v)) return mark_theta_one(x);

  const BinLayout layout = counter ? layout_impl<true>(x, v, theta, nu, counter)
                                   : layout_impl<false>(x, v, theta, nu, counter);
  std::vector<std::size_t> marked;
  CompensatedSum acc;
  for (const auto& bin : layout.bins) {
    for (std::size_t j : bin) {
      marked.push_back(j);
      acc.add(x[j]);
      if (acc.at_least(v)) return MarkingOutcome{std::move(marked), acc.value()};
    }
  }
  return MarkingOutcome{std::move(marked), acc.value()};
}

}  // namespace doerfler
