#pragma once

#include <array>
#include <cstdint>

namespace sdsirs {

/// Philox4x32-10 counter-based generator.
///
/// Nothing here is cryptographic. The point is splittable determinism:
/// (seed, stream) pairs index statistically independent streams, so giving
/// every Monte Carlo trial its own substream makes parallel runs agree with
/// serial ones bit for bit, in any thread count.
class Philox {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit Philox(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  std::uint32_t next_u32() noexcept;
  std::uint64_t next_u64() noexcept;

  /// Unbiased uniform draw from [0, n); n >= 1.
  std::uint64_t below(std::uint64_t n) noexcept;

  /// Uniform in [0, 1) with 53 random bits.
  double unit_double() noexcept;

  /// The raw 10-round mixing function (exposed for known-answer tests).
  static Block mix(Block counter, Key key) noexcept;

 private:
  void refill() noexcept;

  Key key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Block buffer_{};
  unsigned used_ = 4;
};

}  // namespace sdsirs
