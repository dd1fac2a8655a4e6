#include "sdsirs/experiments.hpp"

#include <cmath>
#include <numbers>

#include "parallel.hpp"
#include "sdsirs/errors.hpp"
#include "sdsirs/rng.hpp"

namespace sdsirs {

namespace {

// least point of each nontrivial cycle under the canonical layout
std::vector<std::uint32_t> nontrivial_cycle_reps(const CycleType& type) {
  std::vector<std::uint32_t> reps;
  reps.reserve(type.nontrivial_cycles());
  std::uint64_t pos = 0;
  for (const auto& [length, mult] : type.parts()) {
    if (length == 1) continue;
    for (std::uint64_t i = 0; i < mult; ++i) {
      reps.push_back(static_cast<std::uint32_t>(pos));
      pos += length;
    }
  }
  return reps;
}

void check_experiment_type(const CycleType& type) {
  require(!type.is_identity(), Errc::identity_type,
          "experiments need at least one nontrivial cycle");
}

struct CountStats {
  std::uint64_t n = 0;
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
  std::uint64_t positive = 0;

  void add(std::uint64_t count) {
    ++n;
    sum += count;
    sum_squares += count * count;
    if (count > 0) ++positive;
  }
  void merge(const CountStats& o) {
    n += o.n;
    sum += o.sum;
    sum_squares += o.sum_squares;
    positive += o.positive;
  }
};

TrialMoments to_moments(const CountStats& stats, std::uint64_t seed) {
  TrialMoments out;
  out.trials = stats.n;
  out.seed = seed;
  out.sum = stats.sum;
  out.sum_squares = stats.sum_squares;
  out.positive = stats.positive;
  return out;
}

void check_accumulator_capacity(std::uint64_t trials, std::uint64_t max_count) {
  require(trials >= 1, Errc::invalid_argument, "need at least one trial");
  require(max_count == 0 || trials <= UINT64_MAX / (max_count * max_count),
          Errc::overflow, "trial count too large for exact accumulators");
}

}  // namespace

BlockExperiment make_block_experiment(const CycleType& type, std::uint64_t d,
                                      std::uint64_t tail) {
  check_experiment_type(type);
  const std::uint64_t m = type.degree();
  require(d >= 2, Errc::invalid_argument, "block width must be >= 2");
  require(tail < m && m - tail >= d, Errc::invalid_argument,
          "tail leaves no room for a block");
  require((m - tail) % d == 0, Errc::invalid_argument,
          "block width must divide the non-tail point count");

  BlockExperiment exp;
  exp.type = type;
  exp.d = d;
  exp.tail = tail;
  exp.g = Permutation::canonical(type);
  exp.reps = nontrivial_cycle_reps(type);
  exp.z0 = exp.reps.front();
  exp.y0 = exp.g(exp.z0);
  exp.block_count = (m - tail) / d;
  return exp;
}

BlockOutcome evaluate_block(const BlockExperiment& exp, const Permutation& s) {
  require(s.degree() == exp.degree(), Errc::degree_mismatch,
          "sampled permutation has the wrong degree");
  BlockOutcome out;
  const std::uint64_t b0 = exp.block_of(s(exp.z0));
  const std::uint64_t c0 = exp.block_of(s(exp.y0));
  if (b0 == exp.block_count || c0 == exp.block_count) {
    out.bucket = BlockOutcome::Bucket::escaped;
    return out;
  }
  out.bucket = b0 == c0 ? BlockOutcome::Bucket::same_block
                        : BlockOutcome::Bucket::split_blocks;
  for (std::size_t i = 1; i < exp.reps.size(); ++i) {
    const std::uint32_t z = exp.reps[i];
    if (exp.block_of(s(z)) == b0 && exp.block_of(s(exp.g(z))) != c0)
      ++out.count;
  }
  return out;
}

BlockOutcome sample_block(const BlockExperiment& exp, std::uint64_t seed) {
  Philox rng(seed);
  return evaluate_block(exp, random_permutation(exp.degree(), rng));
}

BlockMoments block_moments(std::uint64_t m, std::uint64_t d, std::uint64_t tail,
                           std::uint64_t cycle_count) {
  require(m >= 6, Errc::degree_too_small,
          "second-moment denominators need at least 6 points");
  require(d >= 2 && tail < m && m - tail >= d && (m - tail) % d == 0,
          Errc::invalid_argument, "invalid block layout");
  require(cycle_count >= 1 && 2 * cycle_count <= m, Errc::invalid_argument,
          "cycle count must satisfy 1 <= k <= m/2");

  const BigInt M = m, D = d, R = tail, k = cycle_count;
  const BigInt den1 = (M - 2) * (M - 3);
  const BigInt den2 = den1 * (M - 4) * (M - 5);
  const BigInt pair = (k - 1) * (k - 2);
  const Rational e1((k - 1) * (D - 2) * (M - D), den1);
  const Rational e2((k - 1) * (D - 1) * (M - D - 2), den1);
  const Rational s1 =
      e1 + Rational(pair * (D - 2) * (D - 3) * (M - D) * (M - D - 1), den2);
  const Rational s2 =
      e2 + Rational(pair * (D - 1) * (D - 2) * (M - D - 3) * (M - D - 4), den2);

  BlockMoments out;
  const BigInt pden = M * (M - 1);
  out.p_same = Rational((M - R) * (D - 1), pden);
  out.p_split = Rational((M - R) * (M - R - D), pden);
  out.p_escaped = 1 - Rational((M - R) * (M - R - 1), pden);
  if (out.p_same > 0) {
    out.mean_same = e1;
    out.second_same = s1;
  }
  if (out.p_split > 0) {
    out.mean_split = e2;
    out.second_split = s2;
  }
  out.mean = out.p_same * e1 + out.p_split * e2;
  out.second_moment = out.p_same * s1 + out.p_split * s2;
  out.variance = out.second_moment - out.mean * out.mean;
  const double c = static_cast<double>(cycle_count) / static_cast<double>(m);
  out.leading_term = c * static_cast<double>(d) *
                     (1.0 - static_cast<double>(d) / static_cast<double>(m));
  return out;
}

BlockMoments block_moments(const BlockExperiment& exp) {
  return block_moments(exp.degree(), exp.d, exp.tail,
                       exp.type.nontrivial_cycles());
}

BlockMoments enumerate_block_moments(const BlockExperiment& exp) {
  const std::uint64_t m = exp.degree();
  require(m <= 8, Errc::degree_too_large,
          "full-distribution enumeration capped at 8 points");

  CountStats escaped, same, split;
  for_each_permutation(m, [&](const Permutation& s) {
    const BlockOutcome out = evaluate_block(exp, s);
    switch (out.bucket) {
      case BlockOutcome::Bucket::escaped: escaped.add(out.count); break;
      case BlockOutcome::Bucket::same_block: same.add(out.count); break;
      case BlockOutcome::Bucket::split_blocks: split.add(out.count); break;
    }
  });

  const BigInt total = factorial(m);
  BlockMoments out;
  out.p_escaped = Rational(BigInt(escaped.n), total);
  out.p_same = Rational(BigInt(same.n), total);
  out.p_split = Rational(BigInt(split.n), total);
  if (same.n > 0) {
    out.mean_same = Rational(BigInt(same.sum), BigInt(same.n));
    out.second_same = Rational(BigInt(same.sum_squares), BigInt(same.n));
  }
  if (split.n > 0) {
    out.mean_split = Rational(BigInt(split.sum), BigInt(split.n));
    out.second_split = Rational(BigInt(split.sum_squares), BigInt(split.n));
  }
  out.mean = Rational(BigInt(same.sum + split.sum), total);
  out.second_moment =
      Rational(BigInt(same.sum_squares + split.sum_squares), total);
  out.variance = out.second_moment - out.mean * out.mean;
  const double c = static_cast<double>(exp.type.nontrivial_cycles()) /
                   static_cast<double>(m);
  out.leading_term = c * static_cast<double>(exp.d) *
                     (1.0 - static_cast<double>(exp.d) / static_cast<double>(m));
  return out;
}

IntransitiveExperiment make_intransitive_experiment(const CycleType& type,
                                                    std::uint64_t tail) {
  check_experiment_type(type);
  const std::uint64_t m = type.degree();
  require(2 * tail <= m, Errc::invalid_argument,
          "invariant tail capped at half the points");

  IntransitiveExperiment exp;
  exp.type = type;
  exp.tail = tail;
  exp.g = Permutation::canonical(type);
  exp.reps = nontrivial_cycle_reps(type);
  return exp;
}

std::uint64_t evaluate_intransitive(const IntransitiveExperiment& exp,
                                    const Permutation& s) {
  require(s.degree() == exp.degree(), Errc::degree_mismatch,
          "sampled permutation has the wrong degree");
  const std::uint64_t boundary = exp.degree() - exp.tail;
  std::uint64_t count = 0;
  for (const std::uint32_t z : exp.reps)
    if (s(z) >= boundary && s(exp.g(z)) < boundary) ++count;
  return count;
}

std::uint64_t sample_intransitive(const IntransitiveExperiment& exp,
                                  std::uint64_t seed) {
  Philox rng(seed);
  return evaluate_intransitive(exp, random_permutation(exp.degree(), rng));
}

IntransitiveMoments intransitive_moments(std::uint64_t m, std::uint64_t tail,
                                         std::uint64_t cycle_count) {
  require(m >= 4, Errc::degree_too_small,
          "second-moment denominators need at least 4 points");
  require(2 * tail <= m, Errc::invalid_argument,
          "invariant tail capped at half the points");
  require(cycle_count >= 1 && 2 * cycle_count <= m, Errc::invalid_argument,
          "cycle count must satisfy 1 <= k <= m/2");

  const BigInt M = m, R = tail, k = cycle_count;
  IntransitiveMoments out;
  out.mean = Rational(k * R * (M - R), M * (M - 1));
  out.second_moment =
      out.mean + Rational(k * (k - 1) * R * (R - 1) * (M - R) * (M - R - 1),
                          M * (M - 1) * (M - 2) * (M - 3));
  out.variance = out.second_moment - out.mean * out.mean;
  const double c = static_cast<double>(cycle_count) / static_cast<double>(m);
  out.leading_term = c * static_cast<double>(tail) *
                     (1.0 - static_cast<double>(tail) / static_cast<double>(m));
  return out;
}

IntransitiveMoments intransitive_moments(const IntransitiveExperiment& exp) {
  return intransitive_moments(exp.degree(), exp.tail,
                              exp.type.nontrivial_cycles());
}

IntransitiveMoments enumerate_intransitive_moments(
    const IntransitiveExperiment& exp) {
  const std::uint64_t m = exp.degree();
  require(m <= 8, Errc::degree_too_large,
          "full-distribution enumeration capped at 8 points");

  CountStats stats;
  for_each_permutation(
      m, [&](const Permutation& s) { stats.add(evaluate_intransitive(exp, s)); });

  const BigInt total = factorial(m);
  IntransitiveMoments out;
  out.mean = Rational(BigInt(stats.sum), total);
  out.second_moment = Rational(BigInt(stats.sum_squares), total);
  out.variance = out.second_moment - out.mean * out.mean;
  const double c = static_cast<double>(exp.type.nontrivial_cycles()) /
                   static_cast<double>(m);
  out.leading_term =
      c * static_cast<double>(exp.tail) *
      (1.0 - static_cast<double>(exp.tail) / static_cast<double>(m));
  return out;
}

double TrialMoments::mean() const {
  return trials == 0 ? 0.0 : to_double(Rational(BigInt(sum), BigInt(trials)));
}

double TrialMoments::variance() const {
  if (trials < 2) return 0.0;
  const BigInt numerator =
      BigInt(trials) * BigInt(sum_squares) - BigInt(sum) * BigInt(sum);
  return to_double(
      Rational(numerator, BigInt(trials) * BigInt(trials - 1)));
}

double TrialMoments::mean_radius() const {
  return trials == 0 ? 0.0
                     : 1.96 * std::sqrt(variance() / static_cast<double>(trials));
}

WilsonInterval TrialMoments::positive_interval() const {
  return wilson_interval(positive, trials);
}

std::optional<double> BlockTrialSummary::mean_same() const {
  if (same_block.trials == 0) return std::nullopt;
  return same_block.mean();
}

std::optional<double> BlockTrialSummary::mean_split() const {
  if (split_blocks.trials == 0) return std::nullopt;
  return split_blocks.mean();
}

BlockTrialSummary run_block_trials(const BlockExperiment& exp,
                                   std::uint64_t trials, std::uint64_t seed) {
  check_accumulator_capacity(trials, exp.reps.size() - 1);

  struct Acc {
    CountStats overall, same, split;
    std::uint64_t escaped = 0;
    void merge(const Acc& o) {
      overall.merge(o.overall);
      same.merge(o.same);
      split.merge(o.split);
      escaped += o.escaped;
    }
  };
  const Acc acc = detail::parallel_trials<Acc>(
      trials, [&](std::uint64_t trial, Acc& a) {
        Philox rng(seed, trial);
        const BlockOutcome out =
            evaluate_block(exp, random_permutation(exp.degree(), rng));
        a.overall.add(out.count);
        switch (out.bucket) {
          case BlockOutcome::Bucket::escaped: ++a.escaped; break;
          case BlockOutcome::Bucket::same_block: a.same.add(out.count); break;
          case BlockOutcome::Bucket::split_blocks: a.split.add(out.count); break;
        }
      });

  BlockTrialSummary out;
  out.overall = to_moments(acc.overall, seed);
  out.escaped = acc.escaped;
  out.same_block = to_moments(acc.same, seed);
  out.split_blocks = to_moments(acc.split, seed);
  return out;
}

TrialMoments run_intransitive_trials(const IntransitiveExperiment& exp,
                                     std::uint64_t trials, std::uint64_t seed) {
  check_accumulator_capacity(trials, exp.reps.size());
  const CountStats acc = detail::parallel_trials<CountStats>(
      trials, [&](std::uint64_t trial, CountStats& a) {
        Philox rng(seed, trial);
        a.add(evaluate_intransitive(exp, random_permutation(exp.degree(), rng)));
      });
  return to_moments(acc, seed);
}

ChebyshevVerdict chebyshev_threshold(double mu, double sigma) {
  require(std::isfinite(mu) && std::isfinite(sigma) && mu > 0 && sigma > 0,
          Errc::nonpositive_input, "mean and sigma must be finite and positive");
  ChebyshevVerdict v;
  v.mu = mu;
  v.sigma = sigma;
  v.k = std::sqrt(mu / sigma);
  v.threshold = mu - v.k * sigma;
  v.lower_bound = 1.0 - 1.0 / (v.k * v.k);
  return v;
}

double crossover_log_ratio(const CycleType& type, const CrossoverCase& kind,
                           std::uint64_t scale) {
  require(scale >= 1, Errc::invalid_argument, "scale must be >= 1");
  const double ell = static_cast<double>(scale);
  const double a = static_cast<double>(type.degree());
  if (std::holds_alternative<PrimitiveCase>(kind)) {
    // order cap 4^(a ell) against the class-size floor r s^ell ell^ell; the
    // true exponent coefficient a-K is >= 1, so the floor stays valid
    const ClassSizeWitness w = class_size_witness(type);
    const double order_log = a * ell * (2.0 * std::numbers::ln2);
    const double floor_log = w.log_r + ell * w.log_s + ell * std::log(ell);
    return order_log - floor_log;
  }
  const WreathCase& wreath = std::get<WreathCase>(kind);
  const double order_log =
      wreath_order_upper_bound(type.degree(), wreath.d, scale).log_value;
  const double class_log = class_size_lower_bound(type, scale).log_value;
  return order_log - class_log;
}

CrossoverResult vanishing_crossover(const CycleType& type,
                                    const CrossoverCase& kind, double epsilon) {
  CrossoverResult result;
  result.class_witness = class_size_witness(type);
  require(std::isfinite(epsilon) && epsilon > 0, Errc::nonpositive_input,
          "epsilon must be finite and positive");
  result.epsilon = epsilon;

  if (const WreathCase* wreath = std::get_if<WreathCase>(&kind)) {
    const std::uint64_t a = type.degree();
    const std::uint64_t cycles = type.total_cycles();
    result.order_witness = wreath_order_witness(a, wreath->d);
    // class-size exponent (a-K) ell log ell must beat the order exponent
    // (a/d) ell log ell, else the ratio never vanishes
    require((a - cycles) * wreath->d > a, Errc::exponent_condition_failed,
            "need (a - total cycles) * d > a for the wreath bound to lose");
  }

  const double log_eps = std::log(epsilon);
  const auto dominated = [&](std::uint64_t ell) {
    return crossover_log_ratio(type, kind, ell) < log_eps &&
           crossover_log_ratio(type, kind, ell + 1) <=
               crossover_log_ratio(type, kind, ell);
  };

  std::uint64_t hi = 1;
  while (!dominated(hi)) {
    require(hi <= (std::uint64_t(1) << 40), Errc::overflow,
            "crossover search exceeded 2^40");
    hi *= 2;
  }
  std::uint64_t lo = hi / 2;  // hi == 1 gives lo == 0, an unexamined sentinel
  while (lo + 1 < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (dominated(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  result.least_scale = hi;
  result.log_ratio_at = crossover_log_ratio(type, kind, hi);
  result.log_ratio_doubled = crossover_log_ratio(type, kind, 2 * hi);
  return result;
}

std::vector<TrendRow> block_probability_trend(
    const CycleType& type, const std::vector<std::uint64_t>& widths,
    std::uint64_t tail, std::uint64_t trials, std::uint64_t seed) {
  require(!widths.empty(), Errc::invalid_argument, "need at least one width");
  std::vector<TrendRow> rows;
  rows.reserve(widths.size());
  for (const std::uint64_t d : widths) {
    const BlockExperiment exp = make_block_experiment(type, d, tail);
    const BlockTrialSummary summary = run_block_trials(exp, trials, seed);
    TrendRow row;
    row.parameter = d;
    row.trials = trials;
    row.positive = summary.overall.positive;
    row.frequency =
        static_cast<double>(row.positive) / static_cast<double>(trials);
    row.ci = summary.overall.positive_interval();
    row.low_power = d <= 3;  // (d-2), (d-3) moment factors vanish
    rows.push_back(row);
  }
  return rows;
}

std::vector<TrendRow> intransitive_probability_trend(
    const CycleType& type, const std::vector<std::uint64_t>& tails,
    std::uint64_t trials, std::uint64_t seed) {
  require(!tails.empty(), Errc::invalid_argument, "need at least one tail size");
  std::vector<TrendRow> rows;
  rows.reserve(tails.size());
  for (const std::uint64_t r : tails) {
    const IntransitiveExperiment exp = make_intransitive_experiment(type, r);
    const TrialMoments summary = run_intransitive_trials(exp, trials, seed);
    TrendRow row;
    row.parameter = r;
    row.trials = trials;
    row.positive = summary.positive;
    row.frequency =
        static_cast<double>(row.positive) / static_cast<double>(trials);
    row.ci = summary.positive_interval();
    row.low_power = r <= 1;  // the mean itself carries a factor of r
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sdsirs
