#include "sdsirs/rng.hpp"

#include <cassert>

namespace sdsirs {

namespace {

constexpr std::uint32_t mult_a = 0xD2511F53u;
constexpr std::uint32_t mult_b = 0xCD9E8D57u;
constexpr std::uint32_t weyl_a = 0x9E3779B9u;
constexpr std::uint32_t weyl_b = 0xBB67AE85u;

inline Philox::Block round_once(const Philox::Block& x,
                                const Philox::Key& k) noexcept {
  const std::uint64_t p0 = static_cast<std::uint64_t>(mult_a) * x[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(mult_b) * x[2];
  return {static_cast<std::uint32_t>(p1 >> 32) ^ x[1] ^ k[0],
          static_cast<std::uint32_t>(p1),
          static_cast<std::uint32_t>(p0 >> 32) ^ x[3] ^ k[1],
          static_cast<std::uint32_t>(p0)};
}

}  // namespace

Philox::Block Philox::mix(Block counter, Key key) noexcept {
  for (int round = 0; round < 10; ++round) {
    counter = round_once(counter, key);
    key[0] += weyl_a;
    key[1] += weyl_b;
  }
  return counter;
}

Philox::Philox(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)},
      stream_(stream) {}

void Philox::refill() noexcept {
  buffer_ = mix({static_cast<std::uint32_t>(block_),
                 static_cast<std::uint32_t>(block_ >> 32),
                 static_cast<std::uint32_t>(stream_),
                 static_cast<std::uint32_t>(stream_ >> 32)},
                key_);
  ++block_;
  used_ = 0;
}

std::uint32_t Philox::next_u32() noexcept {
  if (used_ == 4) refill();
  return buffer_[used_++];
}

std::uint64_t Philox::next_u64() noexcept {
  const std::uint64_t lo = next_u32();
  const std::uint64_t hi = next_u32();
  return lo | (hi << 32);
}

std::uint64_t Philox::below(std::uint64_t n) noexcept {
  assert(n >= 1);
  if (n == 1) return 0;
  // reject into the largest multiple of n below 2^64, then reduce
  const std::uint64_t threshold = (0 - n) % n;  // == 2^64 mod n
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x >= threshold) return x % n;
  }
}

double Philox::unit_double() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace sdsirs
