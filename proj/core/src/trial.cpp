#include "sdsirs/trial.hpp"

#include <algorithm>
#include <cmath>

#include "sdsirs/errors.hpp"

namespace sdsirs {

WilsonInterval wilson_interval(std::uint64_t hits, std::uint64_t trials) {
  require(trials >= 1, Errc::invalid_argument, "wilson_interval needs trials >= 1");
  require(hits <= trials, Errc::invalid_argument, "hits exceed trials");
  constexpr double z = 1.96;
  constexpr double z2 = z * z;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double radius =
      (z / denom) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, center - radius), std::min(1.0, center + radius)};
}

TrialReport make_trial_report(std::string subgroup, std::string cycle_type,
                              std::uint64_t trials, std::uint64_t hits,
                              std::uint64_t seed,
                              std::optional<Rational> exact) {
  TrialReport report;
  report.subgroup = std::move(subgroup);
  report.cycle_type = std::move(cycle_type);
  report.trials = trials;
  report.hits = hits;
  report.freq = trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0;
  const WilsonInterval ci = wilson_interval(hits, trials);
  report.ci_low = ci.low;
  report.ci_high = ci.high;
  report.exact = std::move(exact);
  report.seed = seed;
  return report;
}

}  // namespace sdsirs
