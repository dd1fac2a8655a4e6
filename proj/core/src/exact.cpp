#include "sdsirs/exact.hpp"

#include <cmath>
#include <cstdlib>

#include "sdsirs/errors.hpp"

namespace sdsirs {

BigInt factorial(std::uint64_t n) {
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt falling_factorial(const BigInt& n, std::uint64_t r) {
  BigInt out = 1;
  BigInt term = n;
  for (std::uint64_t i = 0; i < r; ++i, --term) {
    if (term <= 0) return 0;
    out *= term;
  }
  return out;
}

BigInt binomial(const BigInt& n, std::uint64_t k) {
  require(n >= 0, Errc::invalid_argument, "binomial needs n >= 0");
  if (n < k) return 0;
  return falling_factorial(n, k) / factorial(k);
}

Rational rational_pow(const Rational& base, std::uint64_t exponent) {
  Rational out = 1;
  Rational acc = base;
  for (std::uint64_t e = exponent; e != 0; e >>= 1) {
    if (e & 1) out *= acc;
    if (e > 1) acc *= acc;
  }
  return out;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

double log_value(const BigInt& n) {
  require(n > 0, Errc::nonpositive_input, "log of a nonpositive integer");
  const std::size_t bits = msb(n);  // floor(log2 n)
  if (bits < 900) return std::log(n.convert_to<double>());
  // top 64 bits give a 2^-50-accurate mantissa; the rest is exponent
  const BigInt top = n >> (bits - 63);
  return std::log(top.convert_to<double>()) +
         static_cast<double>(bits - 63) * std::log(2.0);
}

bool in_unit_interval(const Rational& q) { return q >= 0 && q <= 1; }

std::string ratio_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_ratio(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    require(den != 0, Errc::parse_error, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::parse_error, "not a ratio: '" + text + "'");
  }
}

}  // namespace sdsirs
