#include "doerfler/sort_mark.hpp"

#include <algorithm>
#include <numeric>

#include "doerfler/error.hpp"

namespace doerfler {
namespace {

template <bool Counted>
std::vector<std::size_t> descending_order(std::span<const double> x, ComparisonCounter* counter) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  detail::Tally<Counted> tally(counter);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    tally.add();
    if (x[a] != x[b]) return x[a] > x[b];
    return a < b;
  });
  return order;
}

std::vector<std::size_t> descending_order(std::span<const double> x, ComparisonCounter* counter) {
  return counter ? descending_order<true>(x, counter) : descending_order<false>(x, counter);
}

}  // namespace

SortedPrefix sorted_prefix(const IndicatorVector& x, ComparisonCounter* counter) {
  SortedPrefix out;
  out.order = descending_order(x.values(), counter);
  out.prefix_sums.reserve(x.size());
  CompensatedSum acc;
  for (std::size_t j : out.order) {
    acc.add(x[j]);
    out.prefix_sums.push_back(acc.value());
  }
  return out;
}

MarkingOutcome sort_mark(const IndicatorVector& x, double theta, ComparisonCounter* counter) {
  validate_theta_below_one(theta);
  const CompensatedSum total = total_sum(x);
  const double v = theta * total.value();
  if (total.below(v)) return mark_theta_one(x);

  std::vector<std::size_t> order = descending_order(x.values(), counter);
  CompensatedSum acc;
  std::size_t n = 0;
  while (n < order.size()) {
    acc.add(x[order[n]]);
    ++n;
    if (acc.at_least(v)) break;
  }
  order.resize(n);
  return MarkingOutcome{std::move(order), acc.value()};
}

}  // namespace doerfler
