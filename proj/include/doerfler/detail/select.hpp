#pragma once

// Selection primitives over arrays of handles (indices into some value array)
// compared through a key functor. Used by the reference QuickMark and by the
// pivot rules; `Tally` is detail::Tally<bool> from instrumentation.hpp.

#include <cstddef>
#include <span>
#include <utility>

namespace doerfler::detail {

enum class Order { kAscending, kDescending };

template <Order order>
inline bool precedes(double a, double b) noexcept {
  if constexpr (order == Order::kAscending) {
    return a < b;
  } else {
    return a > b;
  }
}

/// Dutch-national-flag partition of items[lo, hi) around `pivot`.
/// Returns {first, second} such that, in `order`, [lo, first) precedes the
/// pivot, [first, second) equals it and [second, hi) follows it.
template <Order order, class Key, class Tally>
std::pair<std::size_t, std::size_t> three_way_partition(std::span<std::size_t> items,
                                                        std::size_t lo, std::size_t hi,
                                                        double pivot, const Key& key,
                                                        Tally& tally) {
  std::size_t lt = lo;
  std::size_t i = lo;
  std::size_t gt = hi;
  while (i < gt) {
    const double v = key(items[i]);
    tally.add();
    if (precedes<order>(v, pivot)) {
      std::swap(items[lt++], items[i++]);
      continue;
    }
    tally.add();
    if (precedes<order>(pivot, v)) {
      std::swap(items[i], items[--gt]);
    } else {
      ++i;
    }
  }
  return {lt, gt};
}

template <class Key, class Tally>
void insertion_sort(std::span<std::size_t> items, std::size_t lo, std::size_t hi, const Key& key,
                    Tally& tally) {
  for (std::size_t i = lo + 1; i < hi; ++i) {
    const std::size_t h = items[i];
    const double v = key(h);
    std::size_t j = i;
    while (j > lo) {
      tally.add();
      if (!(key(items[j - 1]) > v)) break;
      items[j] = items[j - 1];
      --j;
    }
    items[j] = h;
  }
}

/// Deterministic worst-case linear selection (median of medians of groups of
/// five). Returns the handle holding the k-th smallest key (0-based) of
/// `items`; afterwards items is partitioned around that position.
template <class Key, class Tally>
std::size_t select_rank(std::span<std::size_t> items, std::size_t k, const Key& key,
                        Tally& tally) {
  constexpr std::size_t kSmall = 10;
  std::size_t lo = 0;
  std::size_t hi = items.size();
  for (;;) {
    const std::size_t n = hi - lo;
    if (n <= kSmall) {
      insertion_sort(items, lo, hi, key, tally);
      return items[lo + k];
    }
    std::size_t groups = 0;
    for (std::size_t g = lo; g < hi; g += 5) {
      const std::size_t end = g + 5 < hi ? g + 5 : hi;
      insertion_sort(items, g, end, key, tally);
      std::swap(items[lo + groups], items[g + (end - g - 1) / 2]);
      ++groups;
    }
    const std::size_t mom =
        select_rank(items.subspan(lo, groups), (groups - 1) / 2, key, tally);
    const auto [less_end, greater_begin] =
        three_way_partition<Order::kAscending>(items, lo, hi, key(mom), key, tally);
    if (k < less_end - lo) {
      hi = less_end;
    } else if (k < greater_begin - lo) {
      return items[lo + k];
    } else {
      k -= greater_begin - lo;
      lo = greater_begin;
    }
  }
}

}  // namespace doerfler::detail
