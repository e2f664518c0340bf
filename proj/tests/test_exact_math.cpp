#include "rwa/error.hpp"
#include "rwa/exact_math.hpp"
#include "rwa/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using rwa::BigInt;
using rwa::Rational;
using namespace rwa::exact;

namespace {

Rational q(std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); }

// Brute force: every tuple in [0, r]^n with the right sum, sorted descending.
std::vector<Composition> brute_compositions(std::uint64_t r, std::size_t n) {
  std::vector<Composition> out;
  Composition cur(n, 0);
  for (;;) {
    std::uint64_t s = 0;
    for (auto v : cur) s += v;
    if (s == r) out.push_back(cur);
    std::size_t i = n;
    while (i-- > 0) {
      if (cur[i] < r) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Multinomial as a product of binomials: C(r, i1) C(r-i1, i2) ...
BigInt multinomial_by_binomials(std::uint64_t r, const Composition &c) {
  BigInt result = 1;
  std::uint64_t left = r;
  for (auto i : c) {
    result *= binomial(left, i);
    left -= i;
  }
  return result;
}

} // namespace

TEST_CASE("rational arithmetic stays reduced") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(3, -6) == q(-1, 2));
  CHECK(q(-3, -6).denominator() == 2);
  CHECK(q(0, 7).denominator() == 1);
  CHECK(q(1, 6) + q(1, 3) == q(1, 2));
  CHECK(q(1, 2) - q(1, 2) == Rational(0));
  CHECK(q(2, 3) * q(3, 4) == q(1, 2));
  CHECK(q(1, 3) / q(2, 3) == q(1, 2));
  CHECK(q(1, 3) < q(1, 2));
  CHECK(q(-1, 3) > q(-1, 2));
  CHECK(q(2, 3).pow(3) == q(8, 27));
  CHECK_THROWS_AS(q(1, 0), rwa::ParameterError);
  CHECK_THROWS_AS(q(1, 2) / Rational(0), rwa::ParameterError);

  std::mt19937_64 gen(11);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000), den(1, 1000);
  for (int t = 0; t < 200; ++t) {
    const Rational x = q(num(gen), den(gen));
    const Rational y = q(num(gen), den(gen));
    const Rational sum = x + y;
    CHECK(boost::multiprecision::gcd(sum.numerator(), sum.denominator()) == 1);
    CHECK(sum - y == x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("rational parsing and rendering") {
  CHECK(Rational::parse("5/2") == q(5, 2));
  CHECK(Rational::parse("2.5") == q(5, 2));
  CHECK(Rational::parse("-0.125") == q(-1, 8));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse(".5") == q(1, 2));
  for (const char *bad : {"", "1/0", "a", "1/2/3", "1..2", "-", "1e5"}) {
    CHECK_THROWS_AS(Rational::parse(bad), rwa::ParameterError);
  }
  CHECK(q(1, 3).str() == "1/3");
  CHECK(Rational(-4).str() == "-4");
  CHECK(q(1, 3).to_decimal(30) == "0.333333333333333333333333333333");
  CHECK(q(2, 3).to_decimal(5) == "0.66667");
  CHECK(q(-1, 4).to_decimal(3) == "-0.250");
  CHECK(Rational(1).to_decimal(3) == "1.00");
  CHECK(q(999999, 1000000).to_decimal(3) == "1.00");
  CHECK(q(999999, 1000).to_decimal(3) == "1000");
  CHECK(Rational::parse("010") == Rational(10));
  CHECK(Rational::parse("08/09") == q(8, 9));
  CHECK(Rational(123456).to_decimal(3) == "123000");
  CHECK(Rational(0).to_decimal() == "0");
  CHECK(q(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
}

TEST_CASE("half-integers") {
  CHECK(HalfInteger::parse("1/2").twice_value() == 1);
  CHECK(HalfInteger::parse("3").twice_value() == 6);
  CHECK(HalfInteger::parse("2.5").twice_value() == 5);
  CHECK(HalfInteger::parse("5/2").str() == "5/2");
  CHECK(HalfInteger::parse("2").str() == "2");
  for (const char *bad : {"0", "0/2", "1/3", "x", "", "1.25", "-1/2"}) {
    CHECK_THROWS_AS(HalfInteger::parse(bad), rwa::ParameterError);
  }
  CHECK((HalfInteger::from_twice(1) + HalfInteger::from_twice(3)).value() == Rational(2));
}

TEST_CASE("rising_gamma_ratio examples") {
  const auto half = HalfInteger::from_twice(1);
  CHECK(rising_gamma_ratio(half, 0) == Rational(1));
  CHECK(rising_gamma_ratio(half, 2) == q(3, 4));
  CHECK(rising_gamma_ratio(HalfInteger::from_twice(3), 1) == q(3, 2));
  // integer base gives factorial ratios
  CHECK(rising_gamma_ratio(HalfInteger::from_integer(1), 5) == Rational(120));
}

TEST_CASE("rising_gamma_ratio matches gamma ratio and the functional equation") {
  for (std::uint64_t t = 1; t <= 9; ++t) {
    const auto base = HalfInteger::from_twice(t);
    for (std::uint64_t m = 0; m <= 12; ++m) {
      // Direct product of (q + j) in rationals.
      Rational prod(1);
      for (std::uint64_t j = 0; j < m; ++j) prod *= base.value() + Rational(static_cast<std::int64_t>(j));
      const Rational got = rising_gamma_ratio(base, m);
      CHECK(got == prod);
      CHECK(got.sign() > 0);
      const double qd = static_cast<double>(t) / 2.0;
      CHECK(got.to_double() == doctest::Approx(std::exp(std::lgamma(qd + m) - std::lgamma(qd))).epsilon(1e-12));
      for (std::uint64_t m2 = 0; m2 <= 6; ++m2) {
        CHECK(rising_gamma_ratio(base, m + m2) == got * rising_gamma_ratio(base.plus(m), m2));
      }
    }
  }
}

TEST_CASE("multinomial examples and errors") {
  CHECK(multinomial(1, Composition{1, 0}) == 1);
  CHECK(multinomial(4, Composition{2, 2}) == 6);
  CHECK(multinomial(3, Composition{1, 1, 1}) == 6);
  CHECK(multinomial(0, Composition{0, 0, 0}) == 1);
  CHECK_THROWS_AS(multinomial(3, Composition{1, 1}), rwa::ParameterError);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(binomial(27, 7) == 888030);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("compositions examples") {
  auto collect = [](std::uint64_t r, std::size_t n) {
    std::vector<Composition> out;
    for (const auto &c : Compositions(r, n)) out.push_back(c);
    return out;
  };
  CHECK(collect(0, 3) == std::vector<Composition>{{0, 0, 0}});
  CHECK(collect(2, 2) == std::vector<Composition>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(collect(3, 2).size() == 4);
  CHECK(collect(5, 1) == std::vector<Composition>{{5}});
  CHECK(Compositions(3, 2).count() == 4);
  CHECK_THROWS_AS(Compositions(3, 0), rwa::ParameterError);
}

TEST_CASE("compositions match brute-force enumeration and the multinomial theorem") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t r = 0; r <= 7; ++r) {
      std::vector<Composition> got;
      BigInt multinomial_total = 0;
      for (const auto &c : Compositions(r, n)) {
        got.push_back(c);
        const BigInt m = multinomial(r, c);
        CHECK(m == multinomial_by_binomials(r, c));
        multinomial_total += m;
      }
      CHECK(got == brute_compositions(r, n));
      CHECK(BigInt(got.size()) == binomial(r + n - 1, n - 1));
      CHECK(std::set<Composition>(got.begin(), got.end()).size() == got.size());
      BigInt n_pow_r = 1;
      for (std::uint64_t i = 0; i < r; ++i) n_pow_r *= n;
      CHECK(multinomial_total == n_pow_r);
    }
  }
}
