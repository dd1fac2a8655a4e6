#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdsirs/cycle_type.hpp"
#include "sdsirs/exact.hpp"
#include "sdsirs/permutation.hpp"
#include "sdsirs/subgroup.hpp"
#include "sdsirs/trial.hpp"

namespace sdsirs {

enum class Tail { infinitely_many_even, eventually_all_odd };
enum class Simplicity { simple, not_simple };

/// Finite prefix (k_0,…,k_N) of the defining sequence plus a declared
/// tail-parity assumption. The tail is an assumption, never inferred: the
/// properties that depend on it (simplicity, the index-2 subgroup) are
/// decided by infinite data a machine cannot see.
class SdsSpec {
 public:
  SdsSpec(std::vector<std::uint32_t> prefix, Tail tail);

  /// JSON shape: {"prefix": [k_0, …], "tail": "inf_even" | "event_odd"}.
  static SdsSpec from_json(const std::string& text);
  static SdsSpec from_json_file(const std::string& path);
  std::string to_json() const;

  const std::vector<std::uint32_t>& prefix() const noexcept { return prefix_; }
  Tail tail() const noexcept { return tail_; }
  std::size_t max_level() const noexcept { return prefix_.size() - 1; }  // N
  std::uint64_t k(std::size_t level) const;
  std::uint64_t level_size(std::size_t level) const;  // |X_level|

 private:
  std::vector<std::uint32_t> prefix_;
  std::vector<std::uint64_t> sizes_;
  Tail tail_;
};

Simplicity simplicity(const SdsSpec& spec);

/// Element of G_n = Sym(X_n): class data always, an explicit permutation
/// when one is being carried.
class LevelElement {
 public:
  LevelElement(std::size_t level, Permutation perm);
  LevelElement(std::size_t level, CycleType type);

  std::size_t level() const noexcept { return level_; }
  const CycleType& type() const noexcept { return type_; }
  const std::optional<Permutation>& perm() const noexcept { return perm_; }

 private:
  std::size_t level_;
  CycleType type_;
  std::optional<Permutation> perm_;
};

/// Point of X_n through its coordinates (i_0,…,i_n), i_m in [k_m].
struct TruncatedPoint {
  std::vector<std::uint32_t> coordinates;
};

std::uint64_t point_index(const SdsSpec& spec, const TruncatedPoint& p);
TruncatedPoint point_at(const SdsSpec& spec, std::size_t level, std::uint64_t index);

/// Image under the composite embedding phi: each level step k splits every
/// point into k copies stacked diagonally. On class data this multiplies
/// all multiplicities by |X_{to}|/|X_{from}|; an explicit permutation is
/// materialized when the target level is small enough to hold one.
LevelElement embed_level(const SdsSpec& spec, const LevelElement& g,
                         std::size_t to_level);

/// Labels for the limiting characters: point masses at the trivial group,
/// the even-part union, and the whole group, plus the stabilizer families
/// sigma_r and sigma~_r.
struct IrsLabel {
  enum class Kind { dirac_trivial, dirac_alt, dirac_full, sigma, sigma_tilde };

  Kind kind = Kind::dirac_trivial;
  std::uint32_t r = 0;  // sigma / sigma_tilde only

  static IrsLabel dirac_trivial() { return {Kind::dirac_trivial, 0}; }
  static IrsLabel dirac_alt() { return {Kind::dirac_alt, 0}; }
  static IrsLabel dirac_full() { return {Kind::dirac_full, 0}; }
  static IrsLabel sigma(std::uint32_t r) { return {Kind::sigma, r}; }
  static IrsLabel sigma_tilde(std::uint32_t r) { return {Kind::sigma_tilde, r}; }
};

/// Accepts "trivial" | "alt" | "full" | "sigma:r" | "sigma~:r".
IrsLabel parse_irs_label(const std::string& text);
std::string to_string(const IrsLabel& label);

/// Whether a level-n element of the given type lies in the even-part union:
/// its sign is evaluated after folding in the remaining prefix steps (an even
/// k forces even parity from that level on; odd k preserves parity, so the
/// declared all-odd tail keeps the level-N verdict stable).
bool in_alternating_union(const SdsSpec& spec, std::size_t level,
                          const CycleType& type);

/// The limiting character evaluated on a level element (exact).
Rational irs_character(const SdsSpec& spec, const IrsLabel& label,
                       const LevelElement& g);

/// Finite-level orbit average for the action on r-tuples of points with
/// pairwise distinct level-n restrictions: f^(r) / m^(r) with m = |X_n| and
/// f the fixed points of g's level-n image. Converges to the sigma_r value.
Rational pet_orbit_average(const SdsSpec& spec, const LevelElement& g,
                           std::uint32_t r, std::size_t level);

/// Draws the stabilizer of r i.i.d. uniform points (collisions at level n
/// resampled): a pointwise stabilizer with |U| = r, parity '+' for sigma
/// and '-' for sigma~. Distinct streams under one seed give independent
/// draws.
SubgroupSpec sample_irs_subgroup(const SdsSpec& spec, const IrsLabel& label,
                                 std::size_t level, std::uint64_t seed,
                                 std::uint64_t stream = 0);

/// Fraction |{g in G_n : g H g^{-1} ∩ G_small = L}| / |G_n| computed by full
/// enumeration (needs |X_n| <= 8). Conjugate inputs H, H' give equal values.
Rational unique_ergodicity_probe_exact(const SdsSpec& spec, const SubgroupSpec& h,
                                       std::size_t level, std::size_t small_level,
                                       const SubgroupSpec& l);

/// Monte Carlo version of the same fraction.
TrialReport unique_ergodicity_probe_sampled(const SdsSpec& spec,
                                            const SubgroupSpec& h,
                                            std::size_t level,
                                            std::size_t small_level,
                                            const SubgroupSpec& l,
                                            std::uint64_t trials,
                                            std::uint64_t seed);

/// Smallest eigenvalue of the Gram matrix [chi(g_j^{-1} g_i)] for elements
/// at a common level; the character axioms demand it be >= 0 up to numerics.
double min_gram_eigenvalue(const SdsSpec& spec, const IrsLabel& label,
                           const std::vector<LevelElement>& elements);

}  // namespace sdsirs
