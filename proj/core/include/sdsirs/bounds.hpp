#pragma once

#include <cstdint>

#include "sdsirs/cycle_type.hpp"

namespace sdsirs {

/// Natural-log value of a positive quantity with a bound direction tag.
/// Used for comparisons at scales where the quantities themselves do not
/// fit in any fixed-width type.
struct LogBound {
  enum class Kind { lower, upper };
  double log_value = 0.0;
  Kind kind = Kind::lower;
};

/// Bracketing of log(n!):   1 <= n!/(sqrt(2 pi n) (n/e)^n) <= e/sqrt(2 pi)
struct StirlingEnvelope {
  LogBound lower;
  LogBound upper;
};

StirlingEnvelope stirling_envelope(std::uint64_t n);

double log_factorial(std::uint64_t n);

/// log of class_size(t). Uses the exact big-integer class size when
/// degree(t) <= exact_degree_limit, otherwise a log-gamma evaluation.
double log_class_size(const CycleType& t, std::uint64_t exact_degree_limit = 2000);

/// Witness constants for the class-size growth bound
///
///   |g^{Sym(a ell)}| >= r * s^ell * ell^{(a-K) ell},
///
/// where a = degree(g), K = total cycle count of g with 1-cycles included
/// (so a-K >= 1 whenever g is not the identity). Derived by bounding every
/// factorial in the class-size formula by its Stirling envelope; recorded in
/// report output so bound values are reproducible.
struct ClassSizeWitness {
  double log_r = 0.0;
  double log_s = 0.0;
  std::uint64_t exponent_coefficient = 0;  // a - K
};

ClassSizeWitness class_size_witness(const CycleType& t);

/// log(r) + ell*log(s) + (a-K)*ell*log(ell), a valid lower bound for
/// log(class_size(diagonal_embed(t, ell))).
LogBound class_size_lower_bound(const CycleType& t, std::uint64_t ell);

/// Witness constants for the wreath-product order bound
///
///   |Sym(d) Wr Sym(a ell / d)| <= b * c^ell * ell^{(a/d) ell}.
struct WreathOrderWitness {
  double log_b = 0.0;
  double log_c = 0.0;
  double exponent_coefficient = 0.0;  // a/d
};

WreathOrderWitness wreath_order_witness(std::uint64_t a, std::uint64_t d);
LogBound wreath_order_upper_bound(std::uint64_t a, std::uint64_t d,
                                  std::uint64_t ell);

}  // namespace sdsirs
