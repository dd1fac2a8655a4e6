#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "sdsirs/cycle_type.hpp"
#include "sdsirs/errors.hpp"
#include "sdsirs/rng.hpp"

namespace sdsirs {

/// Explicit bijection of {0,…,m−1}. Used for brute-force oracles and Monte
/// Carlo sampling; everything asymptotic runs on CycleType instead.
class Permutation {
 public:
  static Permutation identity(std::size_t degree);
  static Permutation from_images(std::vector<std::uint32_t> images);

  /// Canonical realization of a type: cycles laid out consecutively from 0,
  /// longest first, fixed points last.
  static Permutation canonical(const CycleType& t);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  /// (p*q)(x) = p(q(x))
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  Permutation inverse() const;
  Permutation conjugated_by(const Permutation& s) const;  // s g s^{-1}

  CycleType cycle_type() const;
  std::uint64_t fixed_points() const noexcept;
  bool is_identity() const noexcept;
  int sign() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  friend Permutation random_permutation(std::size_t degree, Philox& rng);

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<std::uint32_t> images)
      : images_(std::move(images)) {}

  std::vector<std::uint32_t> images_;
};

/// Exactly uniform over Sym(degree) (unbiased shuffle).
Permutation random_permutation(std::size_t degree, Philox& rng);

/// Calls f(p) for every p in Sym(degree), in lexicographic image order.
/// Enumeration only; degree is capped to keep run time sane.
template <typename F>
void for_each_permutation(std::size_t degree, F&& f) {
  require(degree <= 12, Errc::degree_too_large,
          "full enumeration capped at degree 12");
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  do {
    f(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace sdsirs
