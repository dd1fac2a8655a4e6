#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "sdsirs/exact.hpp"

namespace sdsirs {

/// Conjugacy-class datum of a permutation: cycle length -> multiplicity.
///
/// Iteration runs longest length first, matching the canonical layout used
/// for explicit realizations. Zero multiplicities are dropped on
/// construction; a valid type has degree >= 1.
class CycleType {
 public:
  using Parts =
      std::map<std::uint64_t, std::uint64_t, std::greater<std::uint64_t>>;

  CycleType() = default;  // degree-0 placeholder; not valid for operations
  explicit CycleType(Parts parts);
  CycleType(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> parts);

  static CycleType identity(std::uint64_t degree);

  const Parts& parts() const noexcept { return parts_; }
  std::uint64_t degree() const noexcept { return degree_; }  // a
  std::uint64_t multiplicity(std::uint64_t length) const noexcept;
  std::uint64_t fixed_points() const noexcept { return multiplicity(1); }
  std::uint64_t total_cycles() const noexcept;       // sum of k_i, 1-cycles included
  std::uint64_t nontrivial_cycles() const noexcept;  // k: cycles of length >= 2
  std::uint64_t distinct_lengths() const noexcept;   // t
  bool is_identity() const noexcept;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  Parts parts_;
  std::uint64_t degree_ = 0;
};

/// |g^{Sym(n)}| = n! / prod_j (c_j! * j^{c_j}) over lengths j with
/// multiplicity c_j; exact.
BigInt class_size(const CycleType& t);

/// Parity of any permutation with this type: (-1)^(sum (length-1)*mult).
int sign(const CycleType& t);

/// The ell-fold diagonal embedding on class data: every multiplicity is
/// multiplied by ell (degree scales by ell, fixed-point fraction unchanged).
CycleType diagonal_embed(const CycleType& t, std::uint64_t ell);

/// Parses "2^1 1^2" style text: whitespace-separated length^multiplicity
/// factors, each length listed at most once.
CycleType parse_cycle_type(const std::string& text);
std::string to_string(const CycleType& t);

}  // namespace sdsirs
