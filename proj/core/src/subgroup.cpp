#include "sdsirs/subgroup.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "sdsirs/errors.hpp"

namespace sdsirs {

namespace {

void check_point_set(const std::vector<std::uint32_t>& points, std::size_t degree,
                     const char* what) {
  require(std::is_sorted(points.begin(), points.end()), Errc::invalid_argument,
          std::string(what) + " must be sorted");
  require(std::adjacent_find(points.begin(), points.end()) == points.end(),
          Errc::invalid_argument, std::string(what) + " has repeats");
  require(points.empty() || points.back() < degree, Errc::invalid_argument,
          std::string(what) + " exceeds the ground set");
}

std::string join(const std::vector<std::uint32_t>& points) {
  std::string out;
  for (const std::uint32_t p : points) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

}  // namespace

SubgroupSpec::SubgroupSpec(std::size_t degree, Shape shape)
    : degree_(degree), shape_(std::move(shape)) {
  require(degree_ >= 1, Errc::invalid_argument, "degree must be >= 1");
  if (const auto* stab = std::get_if<PointwiseStabilizer>(&shape_)) {
    check_point_set(stab->fixed_set, degree_, "fixed set");
    require(stab->fixed_set.size() < degree_, Errc::invalid_argument,
            "fixed set must be a proper subset");
    if (stab->parity == Parity::minus)
      require(degree_ - stab->fixed_set.size() >= 2, Errc::invalid_argument,
              "parity '-' needs at least two moved points");
  } else if (const auto* intr = std::get_if<Intransitive>(&shape_)) {
    check_point_set(intr->invariant_set, degree_, "invariant set");
    require(!intr->invariant_set.empty() && intr->invariant_set.size() < degree_,
            Errc::invalid_argument, "invariant set must be proper and nonempty");
  } else if (const auto* wr = std::get_if<ImprimitiveWreath>(&shape_)) {
    require(!wr->blocks.empty(), Errc::invalid_argument, "no blocks");
    const std::size_t d = wr->blocks.front().size();
    require(d >= 2 && d <= degree_ / 2, Errc::invalid_argument,
            "blocksize must satisfy 2 <= d <= m/2");
    std::vector<bool> seen(degree_, false);
    std::size_t covered = 0;
    for (const auto& block : wr->blocks) {
      require(block.size() == d, Errc::invalid_argument, "unequal block sizes");
      for (const std::uint32_t p : block) {
        require(p < degree_ && !seen[p], Errc::invalid_argument,
                "blocks must partition the ground set");
        seen[p] = true;
        ++covered;
      }
    }
    require(covered == degree_, Errc::invalid_argument,
            "blocks must cover the ground set");
  }
}

SubgroupSpec SubgroupSpec::full_sym(std::size_t degree) {
  return SubgroupSpec(degree, FullSym{});
}

SubgroupSpec SubgroupSpec::alternating(std::size_t degree) {
  return SubgroupSpec(degree, Alternating{});
}

SubgroupSpec SubgroupSpec::pointwise_stabilizer(std::size_t degree,
                                                std::vector<std::uint32_t> fixed_set,
                                                Parity parity) {
  std::sort(fixed_set.begin(), fixed_set.end());
  return SubgroupSpec(degree, PointwiseStabilizer{std::move(fixed_set), parity});
}

SubgroupSpec SubgroupSpec::intransitive(std::size_t degree,
                                        std::vector<std::uint32_t> invariant_set) {
  std::sort(invariant_set.begin(), invariant_set.end());
  return SubgroupSpec(degree, Intransitive{std::move(invariant_set)});
}

SubgroupSpec SubgroupSpec::wreath(std::size_t degree,
                                  std::vector<std::vector<std::uint32_t>> blocks) {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  return SubgroupSpec(degree, ImprimitiveWreath{std::move(blocks)});
}

SubgroupSpec SubgroupSpec::wreath_consecutive(std::size_t degree,
                                              std::size_t blocksize) {
  require(blocksize >= 1 && degree % blocksize == 0, Errc::invalid_argument,
          "blocksize must divide the degree");
  std::vector<std::vector<std::uint32_t>> blocks(degree / blocksize);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].resize(blocksize);
    for (std::size_t i = 0; i < blocksize; ++i)
      blocks[b][i] = static_cast<std::uint32_t>(b * blocksize + i);
  }
  return SubgroupSpec(degree, ImprimitiveWreath{std::move(blocks)});
}

std::string SubgroupSpec::describe() const {
  const std::string m = std::to_string(degree_);
  if (std::holds_alternative<FullSym>(shape_)) return "sym(" + m + ")";
  if (std::holds_alternative<Alternating>(shape_)) return "alt(" + m + ")";
  if (const auto* stab = std::get_if<PointwiseStabilizer>(&shape_)) {
    const char* parity = stab->parity == Parity::plus ? "+" : "-";
    return "stab(m=" + m + ",parity=" + parity + ",U={" + join(stab->fixed_set) +
           "})";
  }
  if (const auto* intr = std::get_if<Intransitive>(&shape_))
    return "intransitive(m=" + m + ",U={" + join(intr->invariant_set) + "})";
  const auto& wr = std::get<ImprimitiveWreath>(shape_);
  const std::size_t d = wr.blocks.front().size();
  bool consecutive = true;
  for (std::size_t b = 0; b < wr.blocks.size() && consecutive; ++b)
    for (std::size_t i = 0; i < d && consecutive; ++i)
      consecutive = wr.blocks[b][i] == b * d + i;
  if (consecutive) return "wreath(m=" + m + ",d=" + std::to_string(d) + ")";
  std::string blocks;
  for (const auto& block : wr.blocks) {
    if (!blocks.empty()) blocks += '|';
    blocks += join(block);
  }
  return "wreath(m=" + m + ",blocks={" + blocks + "})";
}

bool contains(const SubgroupSpec& h, const Permutation& s) {
  require(s.degree() == h.degree(), Errc::degree_mismatch,
          "permutation degree differs from subgroup degree");
  if (std::holds_alternative<FullSym>(h.shape())) return true;
  if (std::holds_alternative<Alternating>(h.shape())) return s.sign() == +1;
  if (const auto* stab = std::get_if<PointwiseStabilizer>(&h.shape())) {
    for (const std::uint32_t u : stab->fixed_set)
      if (s(u) != u) return false;
    return stab->parity == Parity::plus || s.sign() == +1;
  }
  if (const auto* intr = std::get_if<Intransitive>(&h.shape())) {
    std::vector<bool> in_u(h.degree(), false);
    for (const std::uint32_t u : intr->invariant_set) in_u[u] = true;
    for (const std::uint32_t u : intr->invariant_set)
      if (!in_u[s(u)]) return false;
    return true;
  }
  const auto& wr = std::get<ImprimitiveWreath>(h.shape());
  std::vector<std::uint32_t> block_of(h.degree());
  for (std::size_t b = 0; b < wr.blocks.size(); ++b)
    for (const std::uint32_t p : wr.blocks[b])
      block_of[p] = static_cast<std::uint32_t>(b);
  for (const auto& block : wr.blocks) {
    const std::uint32_t target = block_of[s(block.front())];
    for (const std::uint32_t p : block)
      if (block_of[s(p)] != target) return false;
  }
  return true;
}

BigInt order(const SubgroupSpec& h) {
  const std::uint64_t m = h.degree();
  if (std::holds_alternative<FullSym>(h.shape())) return factorial(m);
  if (std::holds_alternative<Alternating>(h.shape()))
    return m <= 1 ? BigInt(1) : factorial(m) / 2;
  if (const auto* stab = std::get_if<PointwiseStabilizer>(&h.shape())) {
    const std::uint64_t moved = m - stab->fixed_set.size();
    if (stab->parity == Parity::plus) return factorial(moved);
    return moved <= 1 ? BigInt(1) : factorial(moved) / 2;
  }
  if (const auto* intr = std::get_if<Intransitive>(&h.shape())) {
    const std::uint64_t u = intr->invariant_set.size();
    return factorial(u) * factorial(m - u);
  }
  const auto& wr = std::get<ImprimitiveWreath>(h.shape());
  const std::uint64_t d = wr.blocks.front().size();
  const std::uint64_t count = wr.blocks.size();
  return pow(factorial(d), static_cast<unsigned>(count)) * factorial(count);
}

namespace {

// theta for Sym(U) x Sym(T): split g's cycle multiset so that the U-part has
// total degree |U|; each splitting contributes prod_j C(c_j, x_j) placements,
// and dividing by C(m, u) normalizes against the choice of U.
Rational intransitive_char(const CycleType& g, std::uint64_t m, std::uint64_t u) {
  std::vector<BigInt> splits(u + 1);
  splits[0] = 1;
  for (const auto& [length, mult] : g.parts()) {
    std::vector<BigInt> next(u + 1);
    for (std::uint64_t deg = 0; deg <= u; ++deg) {
      if (splits[deg] == 0) continue;
      BigInt ways = 1;  // C(mult, x), updated multiplicatively
      for (std::uint64_t x = 0;; ++x) {
        const std::uint64_t target = deg + length * x;
        if (target > u) break;
        next[target] += splits[deg] * ways;
        if (x == mult) break;
        ways = ways * (mult - x) / (x + 1);
      }
    }
    splits = std::move(next);
  }
  return Rational(splits[u], binomial(BigInt(m), u));
}

}  // namespace

Rational normalized_char_exact(const SubgroupSpec& h, const CycleType& g) {
  require(g.degree() == h.degree(), Errc::degree_mismatch,
          "cycle type degree differs from subgroup degree");
  const std::uint64_t m = h.degree();
  if (std::holds_alternative<FullSym>(h.shape())) return 1;
  if (std::holds_alternative<Alternating>(h.shape()))
    return (m <= 1 || sign(g) == +1) ? 1 : 0;
  if (const auto* stab = std::get_if<PointwiseStabilizer>(&h.shape())) {
    if (stab->parity == Parity::minus && sign(g) != +1) return 0;
    const std::uint64_t r = stab->fixed_set.size();
    return Rational(falling_factorial(BigInt(g.fixed_points()), r),
                    falling_factorial(BigInt(m), r));
  }
  if (const auto* intr = std::get_if<Intransitive>(&h.shape()))
    return intransitive_char(g, m, intr->invariant_set.size());
  if (g.is_identity()) return 1;
  fail(Errc::no_closed_form,
       "wreath characters have no closed form; use Monte Carlo or brute force");
}

Rational brute_force_char(const SubgroupSpec& h, const Permutation& g) {
  require(h.degree() <= 8, Errc::degree_too_large,
          "brute-force character capped at degree 8");
  require(g.degree() == h.degree(), Errc::degree_mismatch,
          "permutation degree differs from subgroup degree");
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  for_each_permutation(h.degree(), [&](const Permutation& s) {
    if (contains(h, g.conjugated_by(s))) ++hits;
    ++total;
  });
  return Rational(BigInt(hits), BigInt(total));
}

namespace {

struct HitAccum {
  std::uint64_t hits = 0;
  void merge(const HitAccum& other) { hits += other.hits; }
};

}  // namespace

TrialReport normalized_char_montecarlo(const SubgroupSpec& h, const Permutation& g,
                                       std::uint64_t trials, std::uint64_t seed) {
  require(trials >= 1, Errc::invalid_argument, "trials must be >= 1");
  require(g.degree() == h.degree(), Errc::degree_mismatch,
          "permutation degree differs from subgroup degree");

  std::optional<Rational> exact;
  try {
    exact = normalized_char_exact(h, g.cycle_type());
  } catch (const Error& e) {
    if (e.code() != Errc::no_closed_form) throw;
  }

  const auto result = detail::parallel_trials<HitAccum>(
      trials, [&](std::uint64_t trial, HitAccum& acc) {
        Philox rng(seed, trial);
        const Permutation s = random_permutation(h.degree(), rng);
        if (contains(h, g.conjugated_by(s))) ++acc.hits;
      });

  return make_trial_report(h.describe(), to_string(g.cycle_type()), trials,
                           result.hits, seed, std::move(exact));
}

}  // namespace sdsirs
