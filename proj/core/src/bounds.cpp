#include "sdsirs/bounds.hpp"

#include <cmath>
#include <numbers>

#include "sdsirs/errors.hpp"

namespace sdsirs {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// log(e/sqrt(2 pi)), the constant gap between the envelope bounds
const double envelope_gap = 1.0 - 0.5 * std::log(two_pi);

}  // namespace

StirlingEnvelope stirling_envelope(std::uint64_t n) {
  require(n >= 1, Errc::invalid_argument, "stirling_envelope needs n >= 1");
  const double nd = static_cast<double>(n);
  const double lower = 0.5 * std::log(two_pi * nd) + nd * (std::log(nd) - 1.0);
  return {{lower, LogBound::Kind::lower},
          {lower + envelope_gap, LogBound::Kind::upper}};
}

double log_factorial(std::uint64_t n) {
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_class_size(const CycleType& t, std::uint64_t exact_degree_limit) {
  require(t.degree() >= 1, Errc::invalid_argument, "empty cycle type");
  if (t.degree() <= exact_degree_limit) return log_value(class_size(t));
  double v = log_factorial(t.degree());
  for (const auto& [length, mult] : t.parts()) {
    v -= log_factorial(mult);
    v -= static_cast<double>(mult) * std::log(static_cast<double>(length));
  }
  return v;
}

ClassSizeWitness class_size_witness(const CycleType& t) {
  require(!t.is_identity(), Errc::identity_type,
          "class-size bound requires a nonidentity type");
  require(t.degree() >= 1, Errc::invalid_argument, "empty cycle type");
  const double a = static_cast<double>(t.degree());
  const std::uint64_t cap_k = t.total_cycles();
  const double t_distinct = static_cast<double>(t.distinct_lengths());

  // Apply the Stirling envelope to (a ell)! from below and to every k_i ell!
  // from above; the leftover ell^{(1-t)/2} factor has nonpositive exponent
  // and is absorbed into s via log(ell) <= ell.
  double log_s = a * std::log(a) - (a - static_cast<double>(cap_k));
  for (const auto& [length, mult] : t.parts()) {
    log_s -= static_cast<double>(mult) *
             std::log(static_cast<double>(mult) * static_cast<double>(length));
  }
  log_s += 0.5 * (1.0 - t_distinct);

  double log_r = 0.5 * std::log(two_pi * a) - t_distinct * envelope_gap;
  for (const auto& [length, mult] : t.parts()) {
    (void)length;
    log_r -= 0.5 * std::log(two_pi * static_cast<double>(mult));
  }

  return {log_r, log_s, t.degree() - cap_k};
}

LogBound class_size_lower_bound(const CycleType& t, std::uint64_t ell) {
  require(ell >= 1, Errc::invalid_argument, "ell must be >= 1");
  const ClassSizeWitness w = class_size_witness(t);
  const double elld = static_cast<double>(ell);
  const double value =
      w.log_r + elld * w.log_s +
      static_cast<double>(w.exponent_coefficient) * elld * std::log(elld);
  return {value, LogBound::Kind::lower};
}

WreathOrderWitness wreath_order_witness(std::uint64_t a, std::uint64_t d) {
  require(a >= 1, Errc::invalid_argument, "degree must be >= 1");
  require(d >= 2, Errc::invalid_argument, "blocksize must be >= 2");
  const double ad = static_cast<double>(a) / static_cast<double>(d);
  // (d!)^{a ell / d} * (a ell / d)! bounded above by the envelope; the
  // sqrt(ell) residual goes into c via log(ell) <= ell/e.
  const double log_c = ad * log_factorial(d) + ad * (std::log(ad) - 1.0) +
                       0.5 / std::numbers::e;
  const double log_b = envelope_gap + 0.5 * std::log(two_pi * ad);
  return {log_b, log_c, ad};
}

LogBound wreath_order_upper_bound(std::uint64_t a, std::uint64_t d,
                                  std::uint64_t ell) {
  require(ell >= 1, Errc::invalid_argument, "ell must be >= 1");
  const WreathOrderWitness w = wreath_order_witness(a, d);
  const double elld = static_cast<double>(ell);
  const double value =
      w.log_b + elld * w.log_c + w.exponent_coefficient * elld * std::log(elld);
  return {value, LogBound::Kind::upper};
}

}  // namespace sdsirs
