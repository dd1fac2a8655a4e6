#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "sdsirs/experiments.hpp"
#include "sdsirs/subgroup.hpp"
#include "test_support.hpp"

using namespace sdsirs;
using test::thrown_code;

namespace {

// Oracle layer kept deliberately free of the library experiment types: the
// canonical element and both counts are rebuilt from raw index arithmetic.
struct RawLayout {
  std::vector<std::uint32_t> g;
  std::vector<std::uint32_t> reps;
};

RawLayout raw_layout(const CycleType& type) {
  RawLayout lay;
  lay.g.resize(type.degree());
  std::uint32_t next = 0;
  for (const auto& [len, mult] : type.parts()) {
    for (std::uint64_t c = 0; c < mult; ++c) {
      if (len >= 2) lay.reps.push_back(next);
      for (std::uint64_t i = 0; i < len; ++i)
        lay.g[next + i] = next + static_cast<std::uint32_t>((i + 1) % len);
      next += static_cast<std::uint32_t>(len);
    }
  }
  return lay;
}

struct RawOutcome {
  int bucket = 0;  // 0 escaped, 1 same block, 2 split blocks
  std::uint64_t count = 0;
};

RawOutcome raw_block(const RawLayout& lay, std::uint64_t m, std::uint64_t d,
                     std::uint64_t tail, const Permutation& s) {
  const std::uint64_t body = m - tail;
  const std::uint64_t sentinel = body / d;
  const auto blk = [&](std::uint32_t x) {
    return x < body ? x / d : sentinel;
  };
  const std::uint32_t z0 = lay.reps.front();
  const std::uint32_t y0 = lay.g[z0];
  const std::uint64_t b0 = blk(s(z0));
  const std::uint64_t c0 = blk(s(y0));
  if (b0 == sentinel || c0 == sentinel) return {0, 0};
  RawOutcome out{b0 == c0 ? 1 : 2, 0};
  for (std::size_t i = 1; i < lay.reps.size(); ++i) {
    const std::uint32_t z = lay.reps[i];
    if (blk(s(z)) == b0 && blk(s(lay.g[z])) != c0) ++out.count;
  }
  return out;
}

std::uint64_t raw_intransitive(const RawLayout& lay, std::uint64_t m,
                               std::uint64_t r, const Permutation& s) {
  std::uint64_t count = 0;
  for (const std::uint32_t z : lay.reps) {
    if (s(z) >= m - r && s(lay.g[z]) < m - r) ++count;
  }
  return count;
}

void check_same_block_moments(const BlockMoments& a, const BlockMoments& b) {
  CHECK(a.p_escaped == b.p_escaped);
  CHECK(a.p_same == b.p_same);
  CHECK(a.p_split == b.p_split);
  CHECK(a.mean_same == b.mean_same);
  CHECK(a.mean_split == b.mean_split);
  CHECK(a.second_same == b.second_same);
  CHECK(a.second_split == b.second_split);
  CHECK(a.mean == b.mean);
  CHECK(a.second_moment == b.second_moment);
  CHECK(a.variance == b.variance);
  CHECK(a.leading_term == doctest::Approx(b.leading_term));
}

}  // namespace

TEST_CASE("block experiment semantics and moments against enumeration") {
  struct Config {
    std::uint64_t m, d, tail;
    CycleType type;
  };
  const std::vector<Config> grid = {
      {6, 2, 0, CycleType{{2, 2}, {1, 2}}}, {6, 3, 0, CycleType{{2, 2}, {1, 2}}},
      {6, 2, 2, CycleType{{2, 2}, {1, 2}}}, {6, 2, 0, CycleType{{2, 3}}},
      {6, 3, 0, CycleType{{2, 3}}},         {6, 6, 0, CycleType{{2, 3}}},
      {6, 2, 0, CycleType{{3, 2}}},         {7, 3, 1, CycleType{{2, 2}, {1, 3}}},
      {7, 2, 1, CycleType{{3, 2}, {1, 1}}},
  };

  for (const auto& cfg : grid) {
    CAPTURE(to_string(cfg.type));
    CAPTURE(cfg.d);
    CAPTURE(cfg.tail);

    const BlockExperiment exp = make_block_experiment(cfg.type, cfg.d, cfg.tail);
    const RawLayout lay = raw_layout(cfg.type);

    std::uint64_t mismatches = 0;
    BigInt n[3] = {0, 0, 0}, sum[3] = {0, 0, 0}, sumsq[3] = {0, 0, 0};
    BigInt total = 0;
    for_each_permutation(cfg.m, [&](const Permutation& s) {
      const RawOutcome ro = raw_block(lay, cfg.m, cfg.d, cfg.tail, s);
      const BlockOutcome lib = evaluate_block(exp, s);
      if (static_cast<int>(lib.bucket) != ro.bucket || lib.count != ro.count)
        ++mismatches;
      ++total;
      n[ro.bucket] += 1;
      sum[ro.bucket] += ro.count;
      sumsq[ro.bucket] += BigInt(ro.count) * ro.count;
    });
    CHECK(mismatches == 0);

    const BlockMoments closed =
        block_moments(cfg.m, cfg.d, cfg.tail, cfg.type.nontrivial_cycles());
    check_same_block_moments(closed, block_moments(exp));
    check_same_block_moments(closed, enumerate_block_moments(exp));

    CHECK(closed.p_escaped == Rational(n[0], total));
    CHECK(closed.p_same == Rational(n[1], total));
    CHECK(closed.p_split == Rational(n[2], total));

    if (n[1] > 0) {
      REQUIRE(closed.mean_same.has_value());
      CHECK(*closed.mean_same == Rational(sum[1], n[1]));
      CHECK(*closed.second_same == Rational(sumsq[1], n[1]));
    } else {
      CHECK_FALSE(closed.mean_same.has_value());
      CHECK_FALSE(closed.second_same.has_value());
    }
    if (n[2] > 0) {
      REQUIRE(closed.mean_split.has_value());
      CHECK(*closed.mean_split == Rational(sum[2], n[2]));
      CHECK(*closed.second_split == Rational(sumsq[2], n[2]));
    } else {
      CHECK_FALSE(closed.mean_split.has_value());
      CHECK_FALSE(closed.second_split.has_value());
    }

    CHECK(closed.mean == Rational(sum[1] + sum[2], total));
    CHECK(closed.second_moment == Rational(sumsq[1] + sumsq[2], total));
    CHECK(closed.variance ==
          closed.second_moment - closed.mean * closed.mean);

    // Total expectation over the buckets reassembles the mean.
    Rational reassembled = 0;
    if (closed.mean_same) reassembled += closed.p_same * *closed.mean_same;
    if (closed.mean_split) reassembled += closed.p_split * *closed.mean_split;
    CHECK(reassembled == closed.mean);

    // Escape needs a marked pair inside the excluded tail; union bound.
    CHECK(closed.p_escaped <= Rational(2 * cfg.tail, cfg.m));
    const double c =
        static_cast<double>(cfg.type.nontrivial_cycles()) / cfg.m;
    CHECK(closed.leading_term ==
          doctest::Approx(c * cfg.d * (1.0 - static_cast<double>(cfg.d) / cfg.m)));
  }
}

TEST_CASE("worked block example at m=100") {
  const BlockMoments mm = block_moments(100, 10, 0, 50);
  CHECK(*mm.mean_same == Rational(360, 97));
  CHECK(mm.p_same == Rational(1, 11));
  CHECK(mm.p_split == Rational(10, 11));
  CHECK(mm.p_escaped == 0);
  CHECK(mm.mean == Rational(4320, 1067));
}

TEST_CASE("intransitive experiment semantics and moments against enumeration") {
  struct Config {
    std::uint64_t m, tail;
    CycleType type;
  };
  const std::vector<Config> grid = {
      {6, 3, CycleType{{2, 2}, {1, 2}}},
      {6, 2, CycleType{{2, 3}}},
      {7, 3, CycleType{{3, 1}, {2, 1}, {1, 2}}},
      {7, 0, CycleType{{2, 2}, {1, 3}}},
  };

  for (const auto& cfg : grid) {
    CAPTURE(to_string(cfg.type));
    CAPTURE(cfg.tail);

    const IntransitiveExperiment exp =
        make_intransitive_experiment(cfg.type, cfg.tail);
    const RawLayout lay = raw_layout(cfg.type);

    std::uint64_t mismatches = 0;
    BigInt total = 0, sum = 0, sumsq = 0;
    for_each_permutation(cfg.m, [&](const Permutation& s) {
      const std::uint64_t count = raw_intransitive(lay, cfg.m, cfg.tail, s);
      if (evaluate_intransitive(exp, s) != count) ++mismatches;
      ++total;
      sum += count;
      sumsq += BigInt(count) * count;
    });
    CHECK(mismatches == 0);

    const IntransitiveMoments closed =
        intransitive_moments(cfg.m, cfg.tail, cfg.type.nontrivial_cycles());
    const IntransitiveMoments enumerated = enumerate_intransitive_moments(exp);
    CHECK(closed.mean == Rational(sum, total));
    CHECK(closed.second_moment == Rational(sumsq, total));
    CHECK(closed.variance == closed.second_moment - closed.mean * closed.mean);
    CHECK(enumerated.mean == closed.mean);
    CHECK(enumerated.second_moment == closed.second_moment);
    CHECK(enumerated.variance == closed.variance);

    const double c = static_cast<double>(cfg.type.nontrivial_cycles()) / cfg.m;
    CHECK(closed.leading_term ==
          doctest::Approx(c * cfg.tail *
                          (1.0 - static_cast<double>(cfg.tail) / cfg.m)));
    if (cfg.tail == 0) CHECK(closed.mean == 0);
  }
}

TEST_CASE("monte carlo trials reproduce the exact law") {
  const BlockExperiment exp =
      make_block_experiment(CycleType{{2, 2}, {1, 2}}, 2, 0);
  const BlockMoments mm = block_moments(exp);

  SUBCASE("parallel accumulation equals a serial substream walk") {
    const BlockTrialSummary summary = run_block_trials(exp, 3000, 17);
    std::uint64_t sum = 0, sumsq = 0, positive = 0, escaped = 0;
    std::uint64_t same_n = 0, split_n = 0;
    for (std::uint64_t trial = 0; trial < 3000; ++trial) {
      Philox rng(17, trial);
      const BlockOutcome out =
          evaluate_block(exp, random_permutation(exp.degree(), rng));
      sum += out.count;
      sumsq += out.count * out.count;
      if (out.count > 0) ++positive;
      if (out.bucket == BlockOutcome::Bucket::escaped) ++escaped;
      if (out.bucket == BlockOutcome::Bucket::same_block) ++same_n;
      if (out.bucket == BlockOutcome::Bucket::split_blocks) ++split_n;
    }
    CHECK(summary.overall.sum == sum);
    CHECK(summary.overall.sum_squares == sumsq);
    CHECK(summary.overall.positive == positive);
    CHECK(summary.escaped == escaped);
    CHECK(summary.same_block.trials == same_n);
    CHECK(summary.split_blocks.trials == split_n);
    CHECK(summary.escaped + summary.same_block.trials +
              summary.split_blocks.trials ==
          3000);
  }

  SUBCASE("empirical mean lands within four standard errors") {
    const std::uint64_t trials = 50000;
    const BlockTrialSummary summary = run_block_trials(exp, trials, 3);
    const double exact_mean = to_double(mm.mean);
    const double exact_sd = std::sqrt(to_double(mm.variance));
    CHECK(std::abs(summary.overall.mean() - exact_mean) <=
          4.0 * exact_sd / std::sqrt(static_cast<double>(trials)));
    CHECK(summary.overall.sum ==
          run_block_trials(exp, trials, 3).overall.sum);
    CHECK(summary.overall.sum != run_block_trials(exp, trials, 4).overall.sum);

    // Conditional empirical means sit near their exact counterparts.
    REQUIRE(summary.mean_same().has_value());
    REQUIRE(summary.mean_split().has_value());
    CHECK(*summary.mean_same() ==
          doctest::Approx(to_double(*mm.mean_same)).epsilon(0.15));
    CHECK(*summary.mean_split() ==
          doctest::Approx(to_double(*mm.mean_split)).epsilon(0.15));
  }

  SUBCASE("moment accessors are wired to the integer accumulators") {
    const IntransitiveExperiment iexp =
        make_intransitive_experiment(CycleType{{2, 2}, {1, 2}}, 3);
    const TrialMoments tm = run_intransitive_trials(iexp, 10, 5);
    CHECK(tm.trials == 10);
    CHECK(tm.seed == 5);
    CHECK(tm.mean() == doctest::Approx(tm.sum / 10.0));
    const double expected_var =
        (10.0 * tm.sum_squares - static_cast<double>(tm.sum) * tm.sum) /
        (10.0 * 9.0);
    CHECK(tm.variance() == doctest::Approx(expected_var));
    CHECK(tm.mean_radius() ==
          doctest::Approx(1.96 * std::sqrt(tm.variance() / 10.0)));
    const WilsonInterval wi = wilson_interval(tm.positive, tm.trials);
    CHECK(tm.positive_interval().low == doctest::Approx(wi.low));
    CHECK(tm.positive_interval().high == doctest::Approx(wi.high));
  }

  SUBCASE("intransitive empirical mean matches the closed form") {
    const IntransitiveExperiment iexp =
        make_intransitive_experiment(CycleType{{2, 3}}, 2);
    const IntransitiveMoments im = intransitive_moments(6, 2, 3);
    const TrialMoments tm = run_intransitive_trials(iexp, 50000, 29);
    CHECK(std::abs(tm.mean() - to_double(im.mean)) <=
          4.0 * std::sqrt(to_double(im.variance) / 50000.0));
  }

  SUBCASE("single draws reproduce under one seed") {
    const BlockOutcome a = sample_block(exp, 123);
    const BlockOutcome b = sample_block(exp, 123);
    CHECK(a.bucket == b.bucket);
    CHECK(a.count == b.count);
    const IntransitiveExperiment iexp =
        make_intransitive_experiment(CycleType{{2, 3}}, 2);
    CHECK(sample_intransitive(iexp, 9) == sample_intransitive(iexp, 9));
  }
}

TEST_CASE("positive count certifies that the conjugate breaks the partition") {
  const CycleType type{{2, 4}, {1, 4}};  // m = 12, four marked cycles
  const BlockExperiment exp = make_block_experiment(type, 3, 0);
  const SubgroupSpec w = SubgroupSpec::wreath_consecutive(12, 3);

  Philox rng(99);
  int exercised = 0;
  for (int i = 0; i < 400; ++i) {
    const Permutation s = random_permutation(12, rng);
    const BlockOutcome out = evaluate_block(exp, s);
    if (out.bucket == BlockOutcome::Bucket::escaped || out.count == 0) continue;
    ++exercised;
    const Permutation h = (s * exp.g) * s.inverse();
    // The block holding s(z0) maps onto at least two distinct blocks, so the
    // conjugate cannot preserve the partition.
    const std::uint64_t b0 = exp.block_of(s(exp.z0));
    std::set<std::uint64_t> images;
    for (std::uint32_t x = static_cast<std::uint32_t>(3 * b0);
         x < 3 * b0 + 3; ++x)
      images.insert(exp.block_of(h(x)));
    CHECK(images.size() >= 2);
    CHECK_FALSE(contains(w, h));
  }
  CHECK(exercised >= 30);
}

TEST_CASE("variance stays proportional to the block width at large degree") {
  for (const std::uint64_t d : {10ull, 20ull, 30ull, 50ull, 100ull, 150ull, 200ull}) {
    CAPTURE(d);
    const BlockMoments mm = block_moments(3000, d, 0, 1500);
    const double var = to_double(mm.variance);
    CHECK(var > 0.0);
    CHECK(var / static_cast<double>(d) <= 2.5);
    // The mean tracks its leading term up to the O(1/d) correction from
    // the count having d - 1 eligible landing spots inside a block.
    CHECK(to_double(mm.mean) ==
          doctest::Approx(mm.leading_term)
              .epsilon(1.5 / static_cast<double>(d) + 0.01));
  }
}

TEST_CASE("one-sided concentration certificate") {
  const ChebyshevVerdict v = chebyshev_threshold(100.0, 10.0);
  CHECK(v.k == doctest::Approx(std::sqrt(10.0)));
  CHECK(v.threshold == doctest::Approx(100.0 - 10.0 * std::sqrt(10.0)));
  CHECK(v.lower_bound == doctest::Approx(0.9));
  CHECK(v.conclusive());

  CHECK_FALSE(chebyshev_threshold(100.0, 100.0).conclusive());
  CHECK_FALSE(chebyshev_threshold(1.0, 4.0).conclusive());

  for (auto [mu, sigma] : std::vector<std::pair<double, double>>{
           {0.0, 1.0}, {1.0, 0.0}, {-2.0, 1.0}, {1.0, -1.0}}) {
    CAPTURE(mu);
    CAPTURE(sigma);
    CHECK(thrown_code([&] { chebyshev_threshold(mu, sigma); }) ==
          Errc::nonpositive_input);
  }

  SUBCASE("the certified bound is honored empirically") {
    const BlockMoments mm = block_moments(3000, 50, 0, 1500);
    const ChebyshevVerdict verdict = chebyshev_threshold(
        to_double(mm.mean), std::sqrt(to_double(mm.variance)));
    REQUIRE(verdict.conclusive());
    CHECK(verdict.threshold > 0.0);
    const BlockExperiment exp =
        make_block_experiment(CycleType{{2, 1500}}, 50, 0);
    const BlockTrialSummary summary = run_block_trials(exp, 20000, 21);
    // P[count > 0] is at least the certificate, so a Wilson interval that
    // covers the truth cannot sit entirely below it.
    CHECK(summary.overall.positive_interval().high >= verdict.lower_bound);
  }
}

TEST_CASE("bound crossover search") {
  const CycleType small{{2, 1}, {1, 2}};

  SUBCASE("primitive order cap loses past a finite scale") {
    const CrossoverResult res =
        vanishing_crossover(small, PrimitiveCase{}, 0.01);
    CHECK(res.least_scale == 41);
    CHECK(res.epsilon == 0.01);
    CHECK(res.log_ratio_at < std::log(0.01));
    CHECK(res.log_ratio_doubled <= res.log_ratio_at);
    CHECK(res.class_witness.exponent_coefficient == 1);
    CHECK_FALSE(res.order_witness.has_value());

    const auto dominated = [&](std::uint64_t ell) {
      const double at = crossover_log_ratio(small, PrimitiveCase{}, ell);
      return at < std::log(0.01) &&
             crossover_log_ratio(small, PrimitiveCase{}, ell + 1) <= at;
    };
    CHECK(dominated(res.least_scale));
    CHECK_FALSE(dominated(res.least_scale - 1));

    const CrossoverResult tighter =
        vanishing_crossover(small, PrimitiveCase{}, 0.001);
    CHECK(tighter.least_scale >= res.least_scale);
  }

  SUBCASE("primitive ratio formula") {
    const ClassSizeWitness w = class_size_witness(small);
    const double ell = 8.0;
    const double expected = 4.0 * ell * std::log(4.0) -
                            (w.log_r + ell * w.log_s + ell * std::log(ell));
    CHECK(crossover_log_ratio(small, PrimitiveCase{}, 8) ==
          doctest::Approx(expected).epsilon(1e-12));
  }

  SUBCASE("wreath case needs the exponent gap") {
    CHECK(thrown_code([&] {
            vanishing_crossover(small, WreathCase{2}, 0.01);
          }) == Errc::exponent_condition_failed);
    CHECK(thrown_code([] {
            vanishing_crossover(CycleType{{2, 3}}, WreathCase{2}, 0.01);
          }) == Errc::exponent_condition_failed);

    const CycleType t23{{2, 3}};  // a = 6, three cycles, d = 3 passes 9 > 6
    const CrossoverResult res = vanishing_crossover(t23, WreathCase{3}, 0.01);
    REQUIRE(res.order_witness.has_value());
    CHECK(res.order_witness->exponent_coefficient == doctest::Approx(2.0));
    CHECK(res.log_ratio_at < std::log(0.01));
    CHECK(res.log_ratio_doubled <= res.log_ratio_at);
    for (const std::uint64_t ell : {1ull, 4ull, 9ull}) {
      CHECK(crossover_log_ratio(t23, WreathCase{3}, ell) ==
            doctest::Approx(wreath_order_upper_bound(6, 3, ell).log_value -
                            class_size_lower_bound(t23, ell).log_value));
    }
  }

  SUBCASE("input validation") {
    CHECK(thrown_code([&] {
            vanishing_crossover(small, PrimitiveCase{}, 0.0);
          }) == Errc::nonpositive_input);
    CHECK(thrown_code([&] {
            vanishing_crossover(small, PrimitiveCase{}, -1.0);
          }) == Errc::nonpositive_input);
    CHECK(thrown_code([&] {
            crossover_log_ratio(small, PrimitiveCase{}, 0);
          }) == Errc::invalid_argument);
    CHECK(thrown_code([] {
            vanishing_crossover(CycleType::identity(4), PrimitiveCase{}, 0.01);
          }) == Errc::identity_type);
  }
}

TEST_CASE("positive-probability trends") {
  const CycleType type{{2, 15}, {1, 30}};  // m = 60

  SUBCASE("block width sweep") {
    const std::vector<std::uint64_t> widths = {2, 3, 4, 5, 6, 10, 12};
    const auto rows = block_probability_trend(type, widths, 0, 4000, 31);
    REQUIRE(rows.size() == widths.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CAPTURE(i);
      CHECK(rows[i].parameter == widths[i]);
      CHECK(rows[i].trials == 4000);
      CHECK(rows[i].frequency ==
            doctest::Approx(rows[i].positive / 4000.0));
      CHECK(rows[i].ci.low <= rows[i].frequency);
      CHECK(rows[i].frequency <= rows[i].ci.high);
      CHECK(rows[i].low_power == (widths[i] <= 3));
      if (i > 0) CHECK(rows[i].ci.high >= rows[i - 1].ci.low);
    }
    const auto again = block_probability_trend(type, widths, 0, 4000, 31);
    for (std::size_t i = 0; i < rows.size(); ++i)
      CHECK(again[i].positive == rows[i].positive);
  }

  SUBCASE("tail size sweep") {
    const std::vector<std::uint64_t> tails = {1, 2, 3, 5, 10, 15};
    const auto rows = intransitive_probability_trend(type, tails, 4000, 37);
    REQUIRE(rows.size() == tails.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CAPTURE(i);
      CHECK(rows[i].parameter == tails[i]);
      CHECK(rows[i].low_power == (tails[i] <= 1));
      if (i > 0) CHECK(rows[i].ci.high >= rows[i - 1].ci.low);
    }
  }

  SUBCASE("rejects widths that do not tile the ground set") {
    CHECK(thrown_code([&] {
            block_probability_trend(type, {7}, 0, 100, 1);
          }) == Errc::invalid_argument);
    CHECK(thrown_code([&] {
            block_probability_trend(type, {}, 0, 100, 1);
          }) == Errc::invalid_argument);
  }
}

TEST_CASE("experiment construction and moment preconditions") {
  CHECK(thrown_code([] {
          make_block_experiment(CycleType::identity(6), 2, 0);
        }) == Errc::identity_type);
  CHECK(thrown_code([] {
          make_block_experiment(CycleType{{2, 3}}, 1, 0);
        }) == Errc::invalid_argument);
  CHECK(thrown_code([] {
          make_block_experiment(CycleType{{2, 3}}, 4, 0);
        }) == Errc::invalid_argument);
  CHECK(thrown_code([] {
          make_block_experiment(CycleType{{2, 3}}, 2, 6);
        }) == Errc::invalid_argument);
  CHECK(thrown_code([] { block_moments(4, 2, 0, 1); }) ==
        Errc::degree_too_small);
  CHECK(thrown_code([] { block_moments(100, 10, 0, 0); }) ==
        Errc::invalid_argument);
  CHECK(thrown_code([] { block_moments(100, 10, 0, 51); }) ==
        Errc::invalid_argument);
  CHECK(thrown_code([] {
          make_intransitive_experiment(CycleType{{2, 3}}, 4);
        }) == Errc::invalid_argument);
  CHECK(thrown_code([] { intransitive_moments(3, 1, 1); }) ==
        Errc::degree_too_small);
  CHECK(thrown_code([] {
          enumerate_block_moments(
              make_block_experiment(CycleType{{2, 4}, {1, 1}}, 3, 0));
        }) == Errc::degree_too_large);
  const BlockExperiment exp = make_block_experiment(CycleType{{2, 3}}, 2, 0);
  CHECK(thrown_code([&] {
          evaluate_block(exp, Permutation::identity(5));
        }) == Errc::degree_mismatch);
  CHECK(thrown_code([&] { run_block_trials(exp, 0, 1); }) ==
        Errc::invalid_argument);
}
