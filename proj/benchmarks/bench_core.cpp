#include <benchmark/benchmark.h>

#include <cstdint>

#include "sdsirs/bounds.hpp"
#include "sdsirs/cycle_type.hpp"
#include "sdsirs/experiments.hpp"
#include "sdsirs/permutation.hpp"
#include "sdsirs/rng.hpp"
#include "sdsirs/sds.hpp"
#include "sdsirs/subgroup.hpp"

namespace {

using namespace sdsirs;

void BM_class_size_exact(benchmark::State& state) {
  const auto type = diagonal_embed(CycleType{{3, 1}, {2, 2}, {1, 3}},
                                   static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(class_size(type));
  }
}
BENCHMARK(BM_class_size_exact)->Arg(10)->Arg(100)->Arg(1000);

void BM_log_class_size_gamma(benchmark::State& state) {
  // Degree far past the exact-path cutoff, so this times the log-gamma route.
  const auto type = diagonal_embed(CycleType{{2, 1}, {1, 2}}, 1000000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_class_size(type));
  }
}
BENCHMARK(BM_log_class_size_gamma);

void BM_philox_u64(benchmark::State& state) {
  Philox rng(12345);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rng.next_u64());
  }
}
BENCHMARK(BM_philox_u64);

void BM_philox_below(benchmark::State& state) {
  Philox rng(12345);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rng.below(3000));
  }
}
BENCHMARK(BM_philox_below);

void BM_random_permutation(benchmark::State& state) {
  Philox rng(7);
  const auto degree = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_permutation(degree, rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_random_permutation)->Arg(100)->Arg(3000);

void BM_evaluate_block(benchmark::State& state) {
  const auto exp = make_block_experiment(CycleType{{2, 1500}}, 50, 0);
  Philox rng(11);
  const Permutation s = random_permutation(3000, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_block(exp, s));
  }
}
BENCHMARK(BM_evaluate_block);

void BM_evaluate_intransitive(benchmark::State& state) {
  const auto exp = make_intransitive_experiment(CycleType{{2, 1500}}, 100);
  Philox rng(11);
  const Permutation s = random_permutation(3000, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_intransitive(exp, s));
  }
}
BENCHMARK(BM_evaluate_intransitive);

void BM_block_trials_batch(benchmark::State& state) {
  // Whole-pipeline throughput: permutation draw plus evaluation, threaded.
  const auto exp = make_block_experiment(CycleType{{2, 1500}}, 50, 0);
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_block_trials(exp, trials, seed++));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_block_trials_batch)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_char_intransitive_exact(benchmark::State& state) {
  // Multiset-splitting convolution over a 100-point set with a 25-point part.
  const auto h = SubgroupSpec::intransitive(100, [] {
    std::vector<std::uint32_t> u(25);
    for (std::uint32_t i = 0; i < 25; ++i) u[i] = i;
    return u;
  }());
  const CycleType type{{3, 10}, {2, 20}, {1, 30}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalized_char_exact(h, type));
  }
}
BENCHMARK(BM_char_intransitive_exact);

void BM_orbit_average(benchmark::State& state) {
  const SdsSpec spec({2, 3, 2, 3, 2, 3}, Tail::infinitely_many_even);
  const LevelElement g(0, Permutation::from_images({1, 0}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pet_orbit_average(spec, g, 3, 5));
  }
}
BENCHMARK(BM_orbit_average);

}  // namespace

BENCHMARK_MAIN();
