#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sdsirs/cycle_type.hpp"
#include "sdsirs/exact.hpp"
#include "sdsirs/permutation.hpp"
#include "sdsirs/trial.hpp"

namespace sdsirs {

enum class Parity { plus, minus };

/// Sym(complement of U) resp. its even part, fixing U pointwise.
struct PointwiseStabilizer {
  std::vector<std::uint32_t> fixed_set;  // sorted, unique
  Parity parity = Parity::plus;
};

/// Sym(U) x Sym(complement): the setwise stabilizer of a proper subset.
struct Intransitive {
  std::vector<std::uint32_t> invariant_set;  // sorted, unique
};

/// Sym(d) Wr Sym(m/d): permutations preserving an equal-blocksize partition.
struct ImprimitiveWreath {
  std::vector<std::vector<std::uint32_t>> blocks;  // each sorted; disjoint cover
};

struct FullSym {};
struct Alternating {};

/// One of the structured subgroups of Sym(m). Construction validates the
/// shape invariants; degree is carried explicitly.
class SubgroupSpec {
 public:
  using Shape = std::variant<PointwiseStabilizer, Intransitive,
                             ImprimitiveWreath, FullSym, Alternating>;

  SubgroupSpec(std::size_t degree, Shape shape);

  static SubgroupSpec full_sym(std::size_t degree);
  static SubgroupSpec alternating(std::size_t degree);
  static SubgroupSpec pointwise_stabilizer(std::size_t degree,
                                           std::vector<std::uint32_t> fixed_set,
                                           Parity parity);
  static SubgroupSpec intransitive(std::size_t degree,
                                   std::vector<std::uint32_t> invariant_set);
  static SubgroupSpec wreath(std::size_t degree,
                             std::vector<std::vector<std::uint32_t>> blocks);
  /// Wreath over blocks {0,…,d−1}, {d,…,2d−1}, …
  static SubgroupSpec wreath_consecutive(std::size_t degree, std::size_t blocksize);

  std::size_t degree() const noexcept { return degree_; }
  const Shape& shape() const noexcept { return shape_; }
  std::string describe() const;

 private:
  std::size_t degree_;
  Shape shape_;
};

bool contains(const SubgroupSpec& h, const Permutation& s);

BigInt order(const SubgroupSpec& h);

/// Exact normalized permutation character theta(g) = |g^S ∩ H| / |g^S|,
/// equal to the probability that a uniform conjugate of g lands in H.
/// Closed forms exist for all shapes except the wreath (identity aside).
Rational normalized_char_exact(const SubgroupSpec& h, const CycleType& g);

/// Direct-count oracle: |{s in Sym(m) : s g s^{-1} in H}| / m!, degree <= 8.
Rational brute_force_char(const SubgroupSpec& h, const Permutation& g);

/// Estimates theta(g) by conjugating with uniform random permutations, one
/// independent RNG substream per trial. The exact reference is attached
/// whenever a closed form exists.
TrialReport normalized_char_montecarlo(const SubgroupSpec& h, const Permutation& g,
                                       std::uint64_t trials, std::uint64_t seed);

}  // namespace sdsirs
