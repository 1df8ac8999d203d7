#include "doerfler/marking.hpp"

#include <string>

#include "doerfler/binning_mark.hpp"
#include "doerfler/decrement_mark.hpp"
#include "doerfler/error.hpp"
#include "doerfler/sort_mark.hpp"

namespace doerfler {

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::kSort:
      return "sort";
    case Algorithm::kDecrement:
      return "decrement";
    case Algorithm::kBinning:
      return "binning";
    case Algorithm::kQuickMark:
      return "quickmark";
    case Algorithm::kXStar:
      return "xstar";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kSort, Algorithm::kDecrement, Algorithm::kBinning,
                      Algorithm::kQuickMark, Algorithm::kXStar}) {
    if (name == to_string(a)) return a;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown algorithm '" + std::string(name) + "'");
}

MarkReport mark(const IndicatorVector& x, Algorithm algorithm, const MarkingParams& params,
                const MarkOptions& options) {
  validate_theta(params.theta);
  MarkReport report;
  report.goal = goal_value(x, params.theta);
  if (params.theta == 1.0) {
    report.outcome = mark_theta_one(x);
    return report;
  }
  switch (algorithm) {
    case Algorithm::kSort:
      report.outcome = sort_mark(x, params.theta, options.counter);
      break;
    case Algorithm::kDecrement:
      report.outcome =
          decrement_mark(x, params.theta, params.nu, DecrementOptions{false, options.counter});
      break;
    case Algorithm::kBinning:
      report.outcome = binning_mark(x, params.theta, params.nu, options.counter);
      break;
    case Algorithm::kQuickMark: {
      QuickMarkOptions qm;
      qm.pivot = options.pivot;
      qm.counter = options.counter;
      const QuickMarkResult r = quickmark(x, params.theta, qm);
      report.outcome = marked_set(x, r);
      report.x_star = r.x_star;
      break;
    }
    case Algorithm::kXStar: {
      const double threshold = xstar_kernel(x, params.theta, options.counter);
      report.outcome = set_from_threshold(x, params.theta, threshold);
      report.x_star = threshold;
      break;
    }
  }
  return report;
}

}  // namespace doerfler
