#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sdsirs {

// Exact arithmetic carriers. Everything a report labels "exact" flows
// through these two types; no rounding happens before rendering.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // kept in lowest terms

BigInt factorial(std::uint64_t n);

/// n·(n−1)···(n−r+1); zero when r exceeds n.
BigInt falling_factorial(const BigInt& n, std::uint64_t r);

BigInt binomial(const BigInt& n, std::uint64_t k);

Rational rational_pow(const Rational& base, std::uint64_t exponent);

double to_double(const Rational& q);

/// Natural log of a positive integer, safe for values far beyond double range.
double log_value(const BigInt& n);

bool in_unit_interval(const Rational& q);

/// "p/q" in lowest terms, q > 0; integers render as "p/1".
std::string ratio_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p".
Rational parse_ratio(const std::string& text);

}  // namespace sdsirs
