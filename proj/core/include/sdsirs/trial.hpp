#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sdsirs/exact.hpp"

namespace sdsirs {

struct WilsonInterval {
  double low = 0.0;
  double high = 0.0;
};

/// 95% Wilson score interval, z = 1.96 fixed. Chosen over Wald because
/// vanishing characters put frequencies right at 0, where Wald collapses.
WilsonInterval wilson_interval(std::uint64_t hits, std::uint64_t trials);

/// Seeded Monte Carlo frequency estimate with its exact reference value
/// when a closed form exists.
struct TrialReport {
  std::string subgroup;
  std::string cycle_type;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double freq = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::optional<Rational> exact;
  std::uint64_t seed = 0;
};

TrialReport make_trial_report(std::string subgroup, std::string cycle_type,
                              std::uint64_t trials, std::uint64_t hits,
                              std::uint64_t seed,
                              std::optional<Rational> exact);

}  // namespace sdsirs
