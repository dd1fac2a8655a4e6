#include "sdsirs/sds.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "parallel.hpp"
#include "sdsirs/errors.hpp"
#include "sdsirs/rng.hpp"

namespace sdsirs {

namespace {

// explicit permutations are materialized only up to this many points
constexpr std::uint64_t materialize_limit = std::uint64_t(1) << 20;

void check_element(const SdsSpec& spec, const LevelElement& g) {
  require(g.level() <= spec.max_level(), Errc::level_out_of_range,
          "element level beyond the declared prefix");
  require(g.type().degree() == spec.level_size(g.level()), Errc::degree_mismatch,
          "element degree differs from its level size");
}

void check_label(const SdsSpec& spec, const IrsLabel& label) {
  switch (label.kind) {
    case IrsLabel::Kind::sigma:
    case IrsLabel::Kind::sigma_tilde:
      require(label.r >= 1, Errc::invalid_label, "sigma labels need r >= 1");
      break;
    default:
      require(label.r == 0, Errc::invalid_label, "point masses carry no r");
      break;
  }
  if (label.kind == IrsLabel::Kind::sigma_tilde)
    require(spec.tail() == Tail::eventually_all_odd, Errc::invalid_label,
            "sigma~ needs the eventually-all-odd tail (the even-part union "
            "has index 2 only then)");
}

}  // namespace

SdsSpec::SdsSpec(std::vector<std::uint32_t> prefix, Tail tail)
    : prefix_(std::move(prefix)), tail_(tail) {
  require(!prefix_.empty(), Errc::invalid_argument, "prefix must be nonempty");
  sizes_.reserve(prefix_.size());
  std::uint64_t size = 1;
  for (const std::uint32_t k : prefix_) {
    require(k >= 2, Errc::invalid_argument, "every k_n must be >= 2");
    require(size <= UINT64_MAX / k, Errc::overflow, "level sizes overflow");
    size *= k;
    sizes_.push_back(size);
  }
}

SdsSpec SdsSpec::from_json(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::parse_error, std::string("bad spec JSON: ") + e.what());
  }
  require(parsed.is_object() && parsed.contains("prefix") && parsed.contains("tail"),
          Errc::parse_error, "spec JSON needs {prefix, tail}");
  std::vector<std::uint32_t> prefix;
  for (const auto& entry : parsed.at("prefix")) {
    require(entry.is_number_unsigned(), Errc::parse_error,
            "prefix entries must be nonnegative integers");
    const std::uint64_t k = entry.get<std::uint64_t>();
    require(k >= 2 && k <= UINT32_MAX, Errc::parse_error,
            "prefix entries must satisfy 2 <= k < 2^32");
    prefix.push_back(static_cast<std::uint32_t>(k));
  }
  const std::string tail_name = parsed.at("tail").get<std::string>();
  Tail tail;
  if (tail_name == "inf_even") {
    tail = Tail::infinitely_many_even;
  } else if (tail_name == "event_odd") {
    tail = Tail::eventually_all_odd;
  } else {
    fail(Errc::parse_error, "tail must be 'inf_even' or 'event_odd'");
  }
  return SdsSpec(std::move(prefix), tail);
}

SdsSpec SdsSpec::from_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::invalid_argument, "cannot open spec file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return from_json(text.str());
}

std::string SdsSpec::to_json() const {
  nlohmann::ordered_json out;
  out["prefix"] = prefix_;
  out["tail"] = tail_ == Tail::infinitely_many_even ? "inf_even" : "event_odd";
  return out.dump();
}

std::uint64_t SdsSpec::k(std::size_t level) const {
  require(level <= max_level(), Errc::level_out_of_range, "level beyond prefix");
  return prefix_[level];
}

std::uint64_t SdsSpec::level_size(std::size_t level) const {
  require(level <= max_level(), Errc::level_out_of_range, "level beyond prefix");
  return sizes_[level];
}

Simplicity simplicity(const SdsSpec& spec) {
  return spec.tail() == Tail::infinitely_many_even ? Simplicity::simple
                                                   : Simplicity::not_simple;
}

LevelElement::LevelElement(std::size_t level, Permutation perm)
    : level_(level), type_(perm.cycle_type()), perm_(std::move(perm)) {}

LevelElement::LevelElement(std::size_t level, CycleType type)
    : level_(level), type_(std::move(type)) {}

std::uint64_t point_index(const SdsSpec& spec, const TruncatedPoint& p) {
  const std::size_t levels = p.coordinates.size();
  require(levels >= 1 && levels <= spec.max_level() + 1, Errc::level_out_of_range,
          "coordinate count outside the prefix");
  std::uint64_t index = 0;
  std::uint64_t radix = 1;
  for (std::size_t i = 0; i < levels; ++i) {
    require(p.coordinates[i] < spec.k(i), Errc::invalid_argument,
            "coordinate out of range");
    index += radix * p.coordinates[i];
    radix *= spec.k(i);
  }
  return index;
}

TruncatedPoint point_at(const SdsSpec& spec, std::size_t level,
                        std::uint64_t index) {
  require(index < spec.level_size(level), Errc::invalid_argument,
          "point index out of range");
  TruncatedPoint p;
  p.coordinates.resize(level + 1);
  for (std::size_t i = 0; i <= level; ++i) {
    const std::uint64_t k = spec.k(i);
    p.coordinates[i] = static_cast<std::uint32_t>(index % k);
    index /= k;
  }
  return p;
}

LevelElement embed_level(const SdsSpec& spec, const LevelElement& g,
                         std::size_t to_level) {
  check_element(spec, g);
  require(to_level <= spec.max_level(), Errc::level_out_of_range,
          "target level beyond the declared prefix");
  require(to_level >= g.level(), Errc::level_out_of_range,
          "cannot embed downward");
  if (to_level == g.level()) return g;
  const std::uint64_t from_size = spec.level_size(g.level());
  const std::uint64_t to_size = spec.level_size(to_level);
  const std::uint64_t ell = to_size / from_size;
  if (g.perm() && to_size <= materialize_limit) {
    std::vector<std::uint32_t> images(to_size);
    for (std::uint64_t idx = 0; idx < to_size; ++idx) {
      const std::uint64_t base = idx - idx % from_size;
      images[idx] = static_cast<std::uint32_t>(
          base + (*g.perm())(static_cast<std::uint32_t>(idx % from_size)));
    }
    return LevelElement(to_level, Permutation::from_images(std::move(images)));
  }
  return LevelElement(to_level, diagonal_embed(g.type(), ell));
}

IrsLabel parse_irs_label(const std::string& text) {
  if (text == "trivial") return IrsLabel::dirac_trivial();
  if (text == "alt") return IrsLabel::dirac_alt();
  if (text == "full") return IrsLabel::dirac_full();
  for (const std::string& prefix : {std::string("sigma~:"), std::string("sigma:")}) {
    if (text.rfind(prefix, 0) != 0) continue;
    std::uint32_t r = 0;
    try {
      std::size_t used = 0;
      const std::string digits = text.substr(prefix.size());
      r = static_cast<std::uint32_t>(std::stoul(digits, &used));
      require(used == digits.size() && r >= 1, Errc::invalid_label,
              "bad r in label '" + text + "'");
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::invalid_label, "bad r in label '" + text + "'");
    }
    return prefix == "sigma:" ? IrsLabel::sigma(r) : IrsLabel::sigma_tilde(r);
  }
  fail(Errc::invalid_label,
       "unknown label '" + text + "' (want trivial|alt|full|sigma:r|sigma~:r)");
}

std::string to_string(const IrsLabel& label) {
  switch (label.kind) {
    case IrsLabel::Kind::dirac_trivial: return "trivial";
    case IrsLabel::Kind::dirac_alt: return "alt";
    case IrsLabel::Kind::dirac_full: return "full";
    case IrsLabel::Kind::sigma: return "sigma:" + std::to_string(label.r);
    case IrsLabel::Kind::sigma_tilde: return "sigma~:" + std::to_string(label.r);
  }
  return "?";
}

bool in_alternating_union(const SdsSpec& spec, std::size_t level,
                          const CycleType& type) {
  require(level <= spec.max_level(), Errc::level_out_of_range,
          "level beyond prefix");
  require(type.degree() == spec.level_size(level), Errc::degree_mismatch,
          "type degree differs from level size");
  if (spec.tail() == Tail::infinitely_many_even) return true;
  int sg = sign(type);
  for (std::size_t i = level + 1; i <= spec.max_level(); ++i)
    if (spec.k(i) % 2 == 0) sg = +1;
  return sg == +1;
}

Rational irs_character(const SdsSpec& spec, const IrsLabel& label,
                       const LevelElement& g) {
  check_element(spec, g);
  check_label(spec, label);
  switch (label.kind) {
    case IrsLabel::Kind::dirac_trivial:
      return g.type().is_identity() ? 1 : 0;
    case IrsLabel::Kind::dirac_full:
      return 1;
    case IrsLabel::Kind::dirac_alt:
      return in_alternating_union(spec, g.level(), g.type()) ? 1 : 0;
    case IrsLabel::Kind::sigma:
    case IrsLabel::Kind::sigma_tilde: {
      if (label.kind == IrsLabel::Kind::sigma_tilde &&
          !in_alternating_union(spec, g.level(), g.type()))
        return 0;
      const Rational fixed_fraction(BigInt(g.type().fixed_points()),
                                    BigInt(g.type().degree()));
      return rational_pow(fixed_fraction, label.r);
    }
  }
  fail(Errc::invalid_label, "unhandled label");
}

Rational pet_orbit_average(const SdsSpec& spec, const LevelElement& g,
                           std::uint32_t r, std::size_t level) {
  check_element(spec, g);
  require(r >= 1, Errc::invalid_argument, "tuple length r must be >= 1");
  require(level <= spec.max_level(), Errc::level_out_of_range,
          "level beyond prefix");
  require(level >= g.level(), Errc::level_out_of_range,
          "orbit average needs a level at or above the element");
  const std::uint64_t m = spec.level_size(level);
  require(m >= r, Errc::level_too_small,
          "level has fewer points than the tuple length");
  const std::uint64_t scale = m / spec.level_size(g.level());
  const BigInt fixed = BigInt(g.type().fixed_points()) * scale;
  return Rational(falling_factorial(fixed, r), falling_factorial(BigInt(m), r));
}

SubgroupSpec sample_irs_subgroup(const SdsSpec& spec, const IrsLabel& label,
                                 std::size_t level, std::uint64_t seed,
                                 std::uint64_t stream) {
  check_label(spec, label);
  require(label.kind == IrsLabel::Kind::sigma ||
              label.kind == IrsLabel::Kind::sigma_tilde,
          Errc::invalid_label, "sampling is defined for sigma and sigma~ only");
  const std::uint64_t m = spec.level_size(level);
  require(m > label.r, Errc::level_too_small,
          "need more points than sampled labels");
  require(m <= UINT32_MAX, Errc::degree_too_large,
          "level too large for an explicit subgroup");
  const bool tilde = label.kind == IrsLabel::Kind::sigma_tilde;
  if (tilde)
    require(m - label.r >= 2, Errc::level_too_small,
            "parity '-' needs two moved points");

  Philox rng(seed, stream);
  std::vector<std::uint32_t> fixed(label.r);
  for (;;) {
    for (std::uint32_t j = 0; j < label.r; ++j) {
      // one uniform coordinate per factor: the product measure on X_level
      TruncatedPoint p;
      p.coordinates.resize(level + 1);
      for (std::size_t i = 0; i <= level; ++i)
        p.coordinates[i] = static_cast<std::uint32_t>(rng.below(spec.k(i)));
      fixed[j] = static_cast<std::uint32_t>(point_index(spec, p));
    }
    std::sort(fixed.begin(), fixed.end());
    if (std::adjacent_find(fixed.begin(), fixed.end()) == fixed.end()) break;
  }
  return SubgroupSpec::pointwise_stabilizer(
      m, std::move(fixed), tilde ? Parity::minus : Parity::plus);
}

namespace {

// all elements of the level-small copy inside Sym(X_level), plus their
// membership in L
struct EmbeddedSmallGroup {
  std::vector<Permutation> elements;
  std::vector<bool> in_l;
};

EmbeddedSmallGroup embed_small_group(const SdsSpec& spec, std::size_t level,
                                     std::size_t small_level,
                                     const SubgroupSpec& l) {
  const std::uint64_t big = spec.level_size(level);
  const std::uint64_t small = spec.level_size(small_level);
  require(small <= 8, Errc::degree_too_large,
          "small-level group capped at 8 points for enumeration");
  EmbeddedSmallGroup out;
  for_each_permutation(small, [&](const Permutation& x) {
    std::vector<std::uint32_t> images(big);
    for (std::uint64_t idx = 0; idx < big; ++idx) {
      const std::uint64_t base = idx - idx % small;
      images[idx] = static_cast<std::uint32_t>(
          base + x(static_cast<std::uint32_t>(idx % small)));
    }
    out.elements.push_back(Permutation::from_images(std::move(images)));
    out.in_l.push_back(contains(l, x));
  });
  return out;
}

bool probe_match(const SubgroupSpec& h, const Permutation& g_inverse,
                 const EmbeddedSmallGroup& small) {
  for (std::size_t i = 0; i < small.elements.size(); ++i) {
    const bool in_conjugate =
        contains(h, small.elements[i].conjugated_by(g_inverse));
    if (in_conjugate != small.in_l[i]) return false;
  }
  return true;
}

void check_probe_args(const SdsSpec& spec, const SubgroupSpec& h,
                      std::size_t level, std::size_t small_level,
                      const SubgroupSpec& l) {
  require(small_level <= level && level <= spec.max_level(),
          Errc::level_out_of_range, "need small_level <= level <= max level");
  require(h.degree() == spec.level_size(level), Errc::degree_mismatch,
          "H degree differs from level size");
  require(l.degree() == spec.level_size(small_level), Errc::degree_mismatch,
          "L degree differs from small-level size");
}

}  // namespace

Rational unique_ergodicity_probe_exact(const SdsSpec& spec, const SubgroupSpec& h,
                                       std::size_t level, std::size_t small_level,
                                       const SubgroupSpec& l) {
  check_probe_args(spec, h, level, small_level, l);
  const std::uint64_t m = spec.level_size(level);
  require(m <= 8, Errc::degree_too_large, "exact probe capped at 8 points");
  const EmbeddedSmallGroup small = embed_small_group(spec, level, small_level, l);

  std::vector<Permutation> group;
  for_each_permutation(m, [&](const Permutation& g) { group.push_back(g); });

  struct Count {
    std::uint64_t hits = 0;
    void merge(const Count& o) { hits += o.hits; }
  };
  const Count total = detail::parallel_trials<Count>(
      group.size(), [&](std::uint64_t i, Count& acc) {
        if (probe_match(h, group[i].inverse(), small)) ++acc.hits;
      });
  return Rational(BigInt(total.hits), BigInt(group.size()));
}

TrialReport unique_ergodicity_probe_sampled(
    const SdsSpec& spec, const SubgroupSpec& h, std::size_t level,
    std::size_t small_level, const SubgroupSpec& l, std::uint64_t trials,
    std::uint64_t seed) {
  check_probe_args(spec, h, level, small_level, l);
  require(trials >= 1, Errc::invalid_argument, "trials must be >= 1");
  const std::uint64_t m = spec.level_size(level);
  require(m <= materialize_limit, Errc::degree_too_large,
          "sampled probe needs explicit permutations");
  const EmbeddedSmallGroup small = embed_small_group(spec, level, small_level, l);

  std::optional<Rational> exact;
  if (m <= 6) exact = unique_ergodicity_probe_exact(spec, h, level, small_level, l);

  struct Count {
    std::uint64_t hits = 0;
    void merge(const Count& o) { hits += o.hits; }
  };
  const Count total = detail::parallel_trials<Count>(
      trials, [&](std::uint64_t trial, Count& acc) {
        Philox rng(seed, trial);
        const Permutation g = random_permutation(m, rng);
        if (probe_match(h, g.inverse(), small)) ++acc.hits;
      });

  return make_trial_report(
      "probe(H=" + h.describe() + ",L=" + l.describe() + ")", "", trials,
      total.hits, seed, std::move(exact));
}

double min_gram_eigenvalue(const SdsSpec& spec, const IrsLabel& label,
                           const std::vector<LevelElement>& elements) {
  check_label(spec, label);
  require(!elements.empty() && elements.size() <= 64, Errc::invalid_argument,
          "need between 1 and 64 elements");
  const std::size_t level = elements.front().level();
  std::vector<const Permutation*> perms;
  for (const LevelElement& e : elements) {
    check_element(spec, e);
    require(e.level() == level, Errc::level_out_of_range,
            "all elements must share one level");
    require(e.perm().has_value(), Errc::invalid_argument,
            "Gram check needs explicit permutations");
    perms.push_back(&*e.perm());
  }

  const std::size_t n = perms.size();
  Eigen::MatrixXd gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Permutation product = perms[j]->inverse() * (*perms[i]);
      const Rational value =
          irs_character(spec, label, LevelElement(level, product));
      const double v = to_double(value);
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      gram(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  return solver.eigenvalues().minCoeff();
}

}  // namespace sdsirs
