#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "sdsirs/bounds.hpp"
#include "sdsirs/cycle_type.hpp"
#include "sdsirs/exact.hpp"
#include "sdsirs/permutation.hpp"
#include "test_support.hpp"

using namespace sdsirs;
using test::class_census;
using test::thrown_code;

TEST_CASE("cycle type accessors and validation") {
  CycleType t{{4, 1}, {2, 2}, {1, 3}};
  CHECK(t.degree() == 11);
  CHECK(t.multiplicity(4) == 1);
  CHECK(t.multiplicity(2) == 2);
  CHECK(t.multiplicity(3) == 0);
  CHECK(t.fixed_points() == 3);
  CHECK(t.total_cycles() == 6);
  CHECK(t.nontrivial_cycles() == 3);
  CHECK(t.distinct_lengths() == 3);
  CHECK_FALSE(t.is_identity());

  SUBCASE("zero multiplicities are dropped") {
    CycleType u{{3, 0}, {2, 1}};
    CHECK(u.degree() == 2);
    CHECK(u.multiplicity(3) == 0);
    CHECK(u == CycleType{{2, 1}});
  }

  SUBCASE("identity factory") {
    CycleType e = CycleType::identity(5);
    CHECK(e.degree() == 5);
    CHECK(e.fixed_points() == 5);
    CHECK(e.is_identity());
    CHECK(thrown_code([] { CycleType::identity(0); }).has_value());
  }

  SUBCASE("invalid constructions") {
    CHECK(thrown_code([] { CycleType{{0, 2}}; }).has_value());
    CHECK(thrown_code([] { CycleType{{2, 0}}; }).has_value());
    CHECK(thrown_code([] {
            CycleType{{UINT64_MAX, 2}};
          }) == Errc::overflow);
  }

  SUBCASE("iteration runs longest length first") {
    std::vector<std::uint64_t> lengths;
    for (const auto& [len, mult] : t.parts()) lengths.push_back(len);
    CHECK(lengths == std::vector<std::uint64_t>{4, 2, 1});
  }
}

TEST_CASE("cycle type text form") {
  CHECK(parse_cycle_type("2^1 1^2") == CycleType{{2, 1}, {1, 2}});
  CHECK(parse_cycle_type("  3^2   1^1 ") == CycleType{{3, 2}, {1, 1}});
  CHECK(to_string(CycleType{{4, 1}, {2, 2}, {1, 3}}) == "4^1 2^2 1^3");

  SUBCASE("round trip across every class of Sym(6)") {
    for (const auto& [t, count] : class_census(6)) {
      CHECK(parse_cycle_type(to_string(t)) == t);
    }
  }

  SUBCASE("rejects malformed text") {
    CHECK(thrown_code([] { parse_cycle_type(""); }) == Errc::parse_error);
    CHECK(thrown_code([] { parse_cycle_type("banana"); }) == Errc::parse_error);
    CHECK(thrown_code([] { parse_cycle_type("2^"); }) == Errc::parse_error);
    CHECK(thrown_code([] { parse_cycle_type("^3"); }) == Errc::parse_error);
    CHECK(thrown_code([] { parse_cycle_type("2^1 2^2"); }).has_value());
    CHECK(thrown_code([] { parse_cycle_type("0^3"); }).has_value());
  }
}

TEST_CASE("class sizes match direct enumeration of Sym(n)") {
  // Counting permutations of each type is the independent route; the
  // closed form must reproduce every count and the counts must cover n!.
  for (std::size_t n = 1; n <= 7; ++n) {
    CAPTURE(n);
    BigInt covered = 0;
    for (const auto& [t, count] : class_census(n)) {
      CHECK(class_size(t) == BigInt(count));
      covered += count;
    }
    CHECK(covered == factorial(n));
  }

  SUBCASE("worked examples") {
    CHECK(class_size(CycleType{{2, 1}, {1, 1}}) == 3);
    CHECK(class_size(CycleType{{6, 1}}) == 120);
    CHECK(class_size(CycleType::identity(9)) == 1);
  }
}

TEST_CASE("sign agrees with a realized permutation") {
  for (std::size_t n : {4, 6, 7}) {
    for (const auto& [t, count] : class_census(n)) {
      CHECK(sign(t) == Permutation::canonical(t).sign());
    }
  }
  CHECK(sign(CycleType{{2, 1}}) == -1);
  CHECK(sign(CycleType{{3, 1}}) == 1);
  CHECK(sign(CycleType{{2, 2}}) == 1);
  CHECK(sign(CycleType{{4, 1}, {2, 1}, {1, 3}}) == 1);
}

TEST_CASE("diagonal embedding laws") {
  CycleType t{{3, 1}, {2, 1}, {1, 2}};

  CycleType e3 = diagonal_embed(t, 3);
  CHECK(e3 == CycleType{{3, 3}, {2, 3}, {1, 6}});
  CHECK(e3.degree() == 3 * t.degree());

  SUBCASE("composition and unit") {
    CHECK(diagonal_embed(t, 1) == t);
    CHECK(diagonal_embed(diagonal_embed(t, 2), 5) == diagonal_embed(t, 10));
  }

  SUBCASE("sign is multiplicative in the scale") {
    for (std::uint64_t ell = 1; ell <= 6; ++ell) {
      int expected = (ell % 2 == 0 || sign(t) == 1) ? 1 : -1;
      CHECK(sign(diagonal_embed(t, ell)) == expected);
    }
  }

  SUBCASE("fixed point fraction is preserved") {
    CycleType e = diagonal_embed(t, 7);
    CHECK(e.fixed_points() * t.degree() == t.fixed_points() * e.degree());
  }

  SUBCASE("rejects degenerate scales") {
    CHECK(thrown_code([&] { diagonal_embed(t, 0); }).has_value());
    CHECK(thrown_code([&] {
            diagonal_embed(t, UINT64_MAX / 2);
          }) == Errc::overflow);
  }
}

TEST_CASE("exact helpers") {
  CHECK(falling_factorial(BigInt(5), 2) == 20);
  CHECK(falling_factorial(BigInt(5), 0) == 1);
  CHECK(falling_factorial(BigInt(3), 5) == 0);
  CHECK(binomial(BigInt(6), 3) == 20);
  CHECK(binomial(BigInt(4), 0) == 1);
  CHECK(binomial(BigInt(3), 7) == 0);
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rational_pow(Rational(5, 7), 0) == 1);
  CHECK(in_unit_interval(Rational(1, 3)));
  CHECK_FALSE(in_unit_interval(Rational(4, 3)));
  CHECK(ratio_string(Rational(2, 4)) == "1/2");
  CHECK(ratio_string(Rational(3)) == "3/1");
  CHECK(parse_ratio("35280/9506") == Rational(360, 97));
  CHECK(parse_ratio("7") == Rational(7));
  CHECK(thrown_code([] { parse_ratio("3/"); }) == Errc::parse_error);
  CHECK(thrown_code([] { parse_ratio("1/0"); }).has_value());

  SUBCASE("log of huge integers") {
    double exact = log_value(factorial(200));
    CHECK(std::abs(exact - std::lgamma(201.0)) <= 1e-9 * exact);
    // Far beyond double range: 3000! has ~9131 digits.
    double big = log_value(factorial(3000));
    CHECK(std::abs(big - std::lgamma(3001.0)) <= 1e-9 * big);
  }
}

TEST_CASE("factorial envelope brackets the exact value") {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    CAPTURE(n);
    double exact = log_value(factorial(n));
    StirlingEnvelope env = stirling_envelope(n);
    CHECK(env.lower.kind == LogBound::Kind::lower);
    CHECK(env.upper.kind == LogBound::Kind::upper);
    CHECK(env.lower.log_value <= exact + 1e-12 * std::max(1.0, exact));
    CHECK(exact <= env.upper.log_value + 1e-12 * std::max(1.0, exact));
    CHECK(std::abs(log_factorial(n) - exact) <= 1e-10 * std::max(1.0, exact));
  }

  SUBCASE("upper envelope is tight at n = 1") {
    CHECK(std::abs(stirling_envelope(1).upper.log_value) <= 1e-15);
  }

  SUBCASE("envelope gap is the constant 1 - log(2 pi)/2") {
    StirlingEnvelope env = stirling_envelope(57);
    double gap = env.upper.log_value - env.lower.log_value;
    CHECK(std::abs(gap - (1.0 - 0.5 * std::log(2.0 * 3.14159265358979323846))) <=
          1e-12);
  }
}

TEST_CASE("log class size tracks the exact class size") {
  std::vector<CycleType> types = {
      CycleType{{2, 1}},
      CycleType{{2, 1}, {1, 2}},
      CycleType{{3, 2}, {2, 1}, {1, 4}},
      CycleType{{5, 1}, {4, 2}, {1, 1}},
      diagonal_embed(CycleType{{3, 1}, {1, 3}}, 40),
  };
  for (const auto& t : types) {
    CAPTURE(to_string(t));
    double exact = log_value(class_size(t));
    CHECK(std::abs(log_class_size(t) - exact) <=
          1e-10 * std::max(1.0, std::abs(exact)));
  }

  SUBCASE("log-gamma path agrees with the exact path") {
    CycleType big = diagonal_embed(CycleType{{2, 2}, {1, 2}}, 500);  // degree 3000
    double via_gamma = log_class_size(big);  // above the exact cutoff
    double via_exact = log_class_size(big, 10000);
    CHECK(std::abs(via_gamma - via_exact) <= 1e-9 * via_exact);
  }
}

TEST_CASE("class size growth witness") {
  std::vector<CycleType> types = {
      CycleType{{2, 1}},
      CycleType{{2, 1}, {1, 2}},
      CycleType{{3, 1}, {1, 1}},
      CycleType{{2, 2}, {1, 3}},
      CycleType{{5, 1}, {2, 1}},
      CycleType{{4, 1}, {3, 1}, {2, 2}, {1, 3}},
  };

  SUBCASE("exponent coefficient is degree minus total cycles") {
    for (const auto& t : types) {
      CHECK(class_size_witness(t).exponent_coefficient ==
            t.degree() - t.total_cycles());
    }
    CHECK(class_size_witness(CycleType{{2, 1}}).exponent_coefficient == 1);
  }

  SUBCASE("bound never exceeds the exact class size") {
    for (const auto& t : types) {
      for (std::uint64_t ell = 1; ell <= 50; ++ell) {
        CAPTURE(to_string(t));
        CAPTURE(ell);
        double exact = log_value(class_size(diagonal_embed(t, ell)));
        LogBound bound = class_size_lower_bound(t, ell);
        CHECK(bound.kind == LogBound::Kind::lower);
        CHECK(bound.log_value <= exact + 1e-9 * std::max(1.0, std::abs(exact)));
      }
    }
  }

  SUBCASE("bound holds at scales far beyond exact arithmetic") {
    for (const auto& t : types) {
      for (std::uint64_t ell : {100ull, 1000ull, 10000ull}) {
        CAPTURE(to_string(t));
        CAPTURE(ell);
        double value = log_class_size(diagonal_embed(t, ell));
        CHECK(class_size_lower_bound(t, ell).log_value <= value + 1e-9 * value);
      }
    }
  }

  SUBCASE("bound grows without limit in the scale") {
    LogBound at_100 = class_size_lower_bound(CycleType{{2, 1}, {1, 2}}, 100);
    LogBound at_10000 = class_size_lower_bound(CycleType{{2, 1}, {1, 2}}, 10000);
    CHECK(at_100.log_value > 0.0);
    CHECK(at_10000.log_value > 100.0 * at_100.log_value);
  }

  SUBCASE("identity type has no growth witness") {
    CHECK(thrown_code([] {
            class_size_witness(CycleType::identity(4));
          }) == Errc::identity_type);
  }
}

TEST_CASE("wreath order upper bound") {
  // Exact order of the block-preserving subgroup on m points with block
  // width d: (d!)^(m/d) * (m/d)!.
  auto exact_log_order = [](std::uint64_t m, std::uint64_t d) {
    std::uint64_t blocks = m / d;
    return double(blocks) * log_value(factorial(d)) +
           log_value(factorial(blocks));
  };

  for (auto [a, d] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {4, 2}, {6, 3}, {6, 2}, {8, 4}}) {
    CHECK(wreath_order_witness(a, d).exponent_coefficient ==
          doctest::Approx(double(a) / double(d)));
    for (std::uint64_t ell = 1; ell <= 10; ++ell) {
      CAPTURE(a);
      CAPTURE(d);
      CAPTURE(ell);
      double exact = exact_log_order(a * ell, d);
      LogBound bound = wreath_order_upper_bound(a, d, ell);
      CHECK(bound.kind == LogBound::Kind::upper);
      CHECK(bound.log_value >= exact - 1e-9 * std::max(1.0, exact));
    }
  }

  SUBCASE("exponent extends to widths not dividing the base degree") {
    CHECK(wreath_order_witness(5, 2).exponent_coefficient ==
          doctest::Approx(2.5));
    CHECK(thrown_code([] { wreath_order_witness(4, 1); }).has_value());
  }
}
