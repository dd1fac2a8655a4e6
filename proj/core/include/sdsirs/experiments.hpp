#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "sdsirs/bounds.hpp"
#include "sdsirs/cycle_type.hpp"
#include "sdsirs/exact.hpp"
#include "sdsirs/permutation.hpp"
#include "sdsirs/trial.hpp"

namespace sdsirs {

/// Block-splitting experiment. The ground set {0,…,m−1} splits into
/// consecutive blocks of width d on the first m−r points, plus an excluded
/// tail of size r. The canonical representative g of a cycle type is fixed
/// once; a trial draws a uniform s and counts cycle representatives whose
/// image lands in the block of s(z0) while the image of their g-successor
/// leaves the block of s(y0).
struct BlockExperiment {
  CycleType type;
  std::uint64_t d = 0;
  std::uint64_t tail = 0;
  Permutation g = Permutation::identity(0);
  std::vector<std::uint32_t> reps;  // least point of each nontrivial cycle
  std::uint32_t z0 = 0;             // reps.front()
  std::uint32_t y0 = 0;             // g(z0)
  std::uint64_t block_count = 0;    // (m − tail) / d

  std::uint64_t degree() const { return type.degree(); }
  /// Block index of a point; block_count for tail points.
  std::uint64_t block_of(std::uint32_t x) const {
    return x < degree() - tail ? x / d : block_count;
  }
};

BlockExperiment make_block_experiment(const CycleType& type, std::uint64_t d,
                                      std::uint64_t tail = 0);

struct BlockOutcome {
  enum class Bucket { escaped, same_block, split_blocks };
  Bucket bucket = Bucket::escaped;
  std::uint64_t count = 0;
};

BlockOutcome evaluate_block(const BlockExperiment& exp, const Permutation& s);
BlockOutcome sample_block(const BlockExperiment& exp, std::uint64_t seed);

/// Exact distribution summary of the block count over uniform s. Conditional
/// entries are set only when their bucket has positive probability.
struct BlockMoments {
  Rational p_escaped, p_same, p_split;
  std::optional<Rational> mean_same, mean_split;
  std::optional<Rational> second_same, second_split;
  Rational mean, second_moment, variance;
  double leading_term = 0;  // cd(1 − d/m) with c = cycle_count/m
};

/// Closed forms; the count vanishes on escape, so the unconditional moments
/// follow by total expectation. Needs m >= 6 for positive denominators.
BlockMoments block_moments(std::uint64_t m, std::uint64_t d, std::uint64_t tail,
                           std::uint64_t cycle_count);
BlockMoments block_moments(const BlockExperiment& exp);

/// Same summary by full enumeration of Sym(m); degree capped at 8.
BlockMoments enumerate_block_moments(const BlockExperiment& exp);

/// Intransitive experiment: U is the tail of r points; a trial counts cycle
/// representatives mapped into U whose g-successor image leaves U.
struct IntransitiveExperiment {
  CycleType type;
  std::uint64_t tail = 0;  // r = |U|, at most m/2
  Permutation g = Permutation::identity(0);
  std::vector<std::uint32_t> reps;

  std::uint64_t degree() const { return type.degree(); }
};

IntransitiveExperiment make_intransitive_experiment(const CycleType& type,
                                                    std::uint64_t tail);

std::uint64_t evaluate_intransitive(const IntransitiveExperiment& exp,
                                    const Permutation& s);
std::uint64_t sample_intransitive(const IntransitiveExperiment& exp,
                                  std::uint64_t seed);

struct IntransitiveMoments {
  Rational mean, second_moment, variance;
  double leading_term = 0;  // cr(1 − r/m)
};

/// Closed forms; needs m >= 4.
IntransitiveMoments intransitive_moments(std::uint64_t m, std::uint64_t tail,
                                         std::uint64_t cycle_count);
IntransitiveMoments intransitive_moments(const IntransitiveExperiment& exp);
IntransitiveMoments enumerate_intransitive_moments(
    const IntransitiveExperiment& exp);

/// Monte Carlo accumulator over per-trial counts. Sums are exact integers so
/// the unbiased variance can be reproduced bit for bit.
struct TrialMoments {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
  std::uint64_t positive = 0;  // trials with count > 0

  double mean() const;
  double variance() const;     // unbiased; 0 when trials < 2
  double mean_radius() const;  // 1.96 · sqrt(variance / trials)
  WilsonInterval positive_interval() const;
};

struct BlockTrialSummary {
  TrialMoments overall;
  std::uint64_t escaped = 0;
  TrialMoments same_block, split_blocks;  // conditional on the bucket

  std::optional<double> mean_same() const;
  std::optional<double> mean_split() const;
};

BlockTrialSummary run_block_trials(const BlockExperiment& exp,
                                   std::uint64_t trials, std::uint64_t seed);
TrialMoments run_intransitive_trials(const IntransitiveExperiment& exp,
                                     std::uint64_t trials, std::uint64_t seed);

/// One-sided Chebyshev certificate: for any nonnegative variable with the
/// given mean and standard deviation, P[X > threshold] >= lower_bound. The
/// multiplier k = sqrt(mu/sigma) makes the threshold positive exactly when
/// k > 1; otherwise the verdict is inconclusive.
struct ChebyshevVerdict {
  double mu = 0;
  double sigma = 0;
  double k = 0;
  double threshold = 0;    // mu − k·sigma
  double lower_bound = 0;  // 1 − 1/k²
  bool conclusive() const { return k > 1; }
};

ChebyshevVerdict chebyshev_threshold(double mu, double sigma);

/// Bound-crossover search: compare an explicit order upper bound against the
/// conjugacy class size lower bound along the diagonal scale ℓ and find the
/// least ℓ* past which the log-ratio stays below log(epsilon) and keeps
/// decreasing. The primitive case caps subgroup order by 4^(aℓ) and floors
/// the class size at r·sℓ·ℓ^ℓ; the wreath case compares the block-imprimitive
/// order bound against the full class size floor, which only wins when
/// (a−K)·d > a.
struct PrimitiveCase {};
struct WreathCase {
  std::uint64_t d = 0;
};
using CrossoverCase = std::variant<PrimitiveCase, WreathCase>;

struct CrossoverResult {
  std::uint64_t least_scale = 0;  // ℓ*
  double log_ratio_at = 0;        // log of the bound ratio at ℓ*
  double log_ratio_doubled = 0;   // at 2ℓ*
  double epsilon = 0;
  ClassSizeWitness class_witness;
  std::optional<WreathOrderWitness> order_witness;
};

CrossoverResult vanishing_crossover(const CycleType& type,
                                    const CrossoverCase& kind, double epsilon);

/// Log of the bound ratio at one scale (exposed for monotonicity tests).
double crossover_log_ratio(const CycleType& type, const CrossoverCase& kind,
                           std::uint64_t scale);

/// Empirical P[count > 0] swept over the block width (resp. tail size), with
/// shared per-trial random streams across rows so the trend is comparable.
struct TrendRow {
  std::uint64_t parameter = 0;  // d, resp. r
  std::uint64_t trials = 0;
  std::uint64_t positive = 0;
  double frequency = 0;
  WilsonInterval ci;
  bool low_power = false;  // leading moment factors vanish at this parameter
};

std::vector<TrendRow> block_probability_trend(const CycleType& type,
                                              const std::vector<std::uint64_t>& widths,
                                              std::uint64_t tail,
                                              std::uint64_t trials,
                                              std::uint64_t seed);
std::vector<TrendRow> intransitive_probability_trend(
    const CycleType& type, const std::vector<std::uint64_t>& tails,
    std::uint64_t trials, std::uint64_t seed);

}  // namespace sdsirs
