#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace sdsirs::detail {

// Chunked map-reduce over trial indices [0, n). Every trial seeds its own
// RNG substream from its index, and partial accumulators merge in chunk
// order, so the result is independent of the worker count.
//
// Accum: default-constructible, with merge(const Accum&).
// PerTrial: void(std::uint64_t trial_index, Accum&).
template <typename Accum, typename PerTrial>
Accum parallel_trials(std::uint64_t n, PerTrial per_trial) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (n < 2048) workers = 1;
  if (workers > n && n > 0) workers = static_cast<unsigned>(n);

  std::vector<Accum> parts(workers);
  if (workers == 1) {
    for (std::uint64_t i = 0; i < n; ++i) per_trial(i, parts[0]);
    return parts[0];
  }

  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w]() {
      const std::uint64_t lo = n * w / workers;
      const std::uint64_t hi = n * (w + 1) / workers;
      for (std::uint64_t i = lo; i < hi; ++i) per_trial(i, parts[w]);
    });
  }
  for (auto& t : threads) t.join();

  Accum total = std::move(parts[0]);
  for (unsigned w = 1; w < workers; ++w) total.merge(parts[w]);
  return total;
}

}  // namespace sdsirs::detail
