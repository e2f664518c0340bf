#include "rwa/distributions.hpp"
#include "rwa/error.hpp"
#include "rwa/moments.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using rwa::BigInt;
using rwa::Rational;
using rwa::exact::binomial;
using rwa::exact::HalfInteger;
using namespace rwa::moments;

namespace {

Rational q(std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); }

HalfInteger h(std::uint64_t twice) { return HalfInteger::from_twice(twice); }

// int_0^1 x^p (1-x)^m dx by binomial expansion of (1-x)^m.
Rational beta_integral(std::uint64_t p, std::uint64_t m) {
  Rational sum;
  for (std::uint64_t l = 0; l <= m; ++l) {
    Rational term(binomial(m, l), BigInt(p + l + 1));
    sum += (l % 2 == 0) ? term : -term;
  }
  return sum;
}

// E(R1^i R2^j) for two uniform spacings: int_0^1 u^i (1-u)^j du.
Rational spacing_moment_2(std::uint64_t i, std::uint64_t j) { return beta_integral(i, j); }

// E(R1^i R2^j R3^l) for three spacings: density 2 on the triangle, and
// (1-x-y)^l expanded as sum_{b+c<=l} multinomial (-x)^b (-y)^c.
Rational spacing_moment_3(std::uint64_t i, std::uint64_t j, std::uint64_t l) {
  Rational sum;
  for (std::uint64_t b = 0; b <= l; ++b) {
    for (std::uint64_t c = 0; b + c <= l; ++c) {
      const std::uint64_t e = l - b - c;
      BigInt coef = rwa::exact::multinomial(l, std::vector<std::uint64_t>{e, b, c});
      // int_0^1 x^{i+b} int_0^{1-x} y^{j+c} dy dx = int x^{i+b} (1-x)^{j+c+1} / (j+c+1)
      Rational inner = beta_integral(i + b, j + c + 1) / Rational(static_cast<std::int64_t>(j + c + 1));
      Rational term = Rational(coef) * inner;
      sum += ((b + c) % 2 == 0) ? term : -term;
    }
  }
  return Rational(2) * sum;
}

// E cos(theta)^i over a full period by the trapezoid rule, exact for i < points.
double arcsine_moment_trapezoid(unsigned i) {
  const int points = 256;
  double sum = 0.0;
  for (int t = 0; t < points; ++t) {
    sum += std::pow(std::cos(2.0 * std::numbers::pi * t / points), i);
  }
  return sum / points;
}

// E X^{2k} under the power semicircle law with a = 1, via x = sin(theta).
double psc_moment_quadrature(double lambda, unsigned k) {
  const double norm = std::exp(std::lgamma(lambda + 1.0) - std::lgamma(lambda + 0.5) - 0.5 * std::log(std::numbers::pi));
  auto f = [&](double t) { return std::pow(std::sin(t), 2.0 * k) * std::pow(std::cos(t), 2.0 * lambda); };
  return norm * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -std::numbers::pi / 2,
                                                                               std::numbers::pi / 2, 15, 1e-15);
}

BigInt catalan(std::uint64_t k) {
  std::vector<BigInt> c{1};
  for (std::uint64_t m = 1; m <= k; ++m) {
    BigInt next = 0;
    for (std::uint64_t i = 0; i < m; ++i) next += c[i] * c[m - 1 - i];
    c.push_back(next);
  }
  return c[k];
}

// Leading principal minors of a rational matrix by fraction-exact elimination.
std::vector<Rational> leading_minors(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<Rational> minors;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[col][col].is_zero()) {
      minors.push_back(Rational(0));
      for (std::size_t rest = col + 1; rest < n; ++rest) minors.push_back(Rational(0));
      return minors;
    }
    det *= m[col][col];
    minors.push_back(det);
    for (std::size_t row = col + 1; row < n; ++row) {
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[row][c] -= f * m[col][c];
    }
  }
  return minors;
}

} // namespace

TEST_CASE("lemma sides: examples") {
  CHECK(lemma_lhs(DirichletParams({h(2), h(2)}), 1) == Rational(2));
  CHECK(lemma_lhs(DirichletParams({h(1), h(1)}), 1) == Rational(1));
  CHECK(lemma_lhs(DirichletParams({h(3), h(5), h(1)}), 0) == Rational(1));
  CHECK(lemma_rhs(DirichletParams({h(2), h(2)}), 1) == Rational(2));
  CHECK(lemma_rhs(DirichletParams({h(1), h(1), h(1)}), 2) == q(15, 4));
  CHECK(lemma_rhs(DirichletParams({h(7)}), 0) == Rational(1));
  CHECK_THROWS_AS(DirichletParams({}), rwa::ParameterError);
}

TEST_CASE("lemma identity holds exhaustively for short parameter lists") {
  const std::vector<std::uint64_t> grid{1, 2, 3, 4, 5}; // 1/2 ... 5/2
  std::vector<std::vector<std::uint64_t>> lists{{}};
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto &l : lists) {
      for (auto t : grid) {
        auto e = l;
        e.push_back(t);
        next.push_back(e);
      }
    }
    lists = next;
    for (const auto &l : lists) {
      std::vector<HalfInteger> params;
      for (auto t : l) params.push_back(h(t));
      const DirichletParams d(params);
      for (std::uint64_t r = 0; r <= 8; ++r) {
        REQUIRE(lemma_lhs(d, r) == lemma_rhs(d, r));
      }
    }
  }
}

TEST_CASE("dirichlet joint moment matches simplex integrals") {
  for (std::uint64_t i = 0; i <= 6; ++i) {
    for (std::uint64_t j = 0; j <= 6; ++j) {
      CHECK(dirichlet_joint_moment(std::vector<std::uint64_t>{i, j}) == spacing_moment_2(i, j));
      for (std::uint64_t l = 0; l <= 4; ++l) {
        CHECK(dirichlet_joint_moment(std::vector<std::uint64_t>{i, j, l}) == spacing_moment_3(i, j, l));
      }
    }
  }
  // E(R_1^2) at n = 3
  CHECK(dirichlet_joint_moment(std::vector<std::uint64_t>{2, 0, 0}) == q(1, 6));
}

TEST_CASE("arcsine moments") {
  CHECK(rwa::dist::arcsine_moment(1) == Rational(0));
  CHECK(rwa::dist::arcsine_moment(2) == q(1, 2));
  CHECK(rwa::dist::arcsine_moment(4) == q(3, 8));
  for (unsigned i = 0; i <= 30; ++i) {
    const Rational m = rwa::dist::arcsine_moment(i);
    CHECK(m.to_double() == doctest::Approx(arcsine_moment_trapezoid(i)).epsilon(1e-13));
    if (i % 2 == 0) {
      BigInt four_pow = 1;
      for (unsigned t = 0; t < i / 2; ++t) four_pow *= 4;
      CHECK(m == Rational(binomial(i, i / 2), four_pow));
    }
  }
}

TEST_CASE("closed-form moment examples") {
  CHECK(rwa_moment_closed(2, 1) == q(1, 3));
  CHECK(rwa_moment_closed(3, 1) == q(1, 4));
  CHECK(rwa_moment_closed(3, 2) == q(1, 8));
  CHECK(rwa_moment_closed(3, 3) == q(5, 64));
  for (std::size_t n = 2; n <= 9; ++n) CHECK(rwa_moment_closed(n, 0) == Rational(1));
  CHECK_THROWS_AS(rwa_moment_closed(1, 1), rwa::ParameterError);
}

TEST_CASE("oracle examples") {
  CHECK(rwa_moment_oracle(2, 2) == q(1, 3));
  CHECK(rwa_moment_oracle(5, 3) == Rational(0));
  // n = 4, r = 4 straight from the composition sum, then compared with the closed form.
  const Rational oracle44 = rwa_moment_oracle(4, 4);
  CHECK(oracle44 == q(3, 35));
  CHECK(rwa_moment_closed(4, 2) == oracle44);
  CHECK(rwa_moment_oracle(3, 0) == Rational(1));
  CHECK(oracle_term_count(8, 20) == 888030);
  CHECK_THROWS_AS(rwa_moment_oracle(1, 2), rwa::ParameterError);
}

TEST_CASE("oracle: literal parity and partitioned sums agree") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::uint64_t r = 0; r <= 8; ++r) {
      const Rational base = rwa_moment_oracle(n, r);
      CHECK(rwa_moment_oracle(n, r, {1, true}) == base);
      CHECK(rwa_moment_oracle(n, r, {3, false}) == base);
      CHECK(rwa_moment_oracle(n, r, {16, true}) == base);
    }
  }
}

TEST_CASE("theorem identity and internal consistency for n <= 6, k <= 6") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::uint64_t k = 0; k <= 6; ++k) {
      CHECK(rwa_moment_oracle(n, 2 * k) == rwa_moment_closed(n, k));
      CHECK(rwa_moment_oracle(n, 2 * k + 1) == Rational(0));
      CHECK(rwa_moment_closed_intermediate(n, k) == rwa_moment_closed(n, k));
    }
  }
}

TEST_CASE("psc moments: examples, reduction chain and quadrature") {
  CHECK(psc_moment(0, 1) == q(1, 2));
  CHECK(psc_moment(2, 3) == q(5, 64));
  CHECK(psc_moment(1, 2) == q(1, 5));
  for (std::uint64_t k = 0; k <= 10; ++k) {
    BigInt four_pow = 1;
    for (std::uint64_t t = 0; t < k; ++t) four_pow *= 4;
    CHECK(psc_moment(2, k) * Rational(four_pow) == Rational(catalan(k)));
    CHECK(psc_moment(0, k) == rwa::dist::arcsine_moment(2 * k));
    for (std::size_t n = 2; n <= 8; ++n) CHECK(psc_moment(n - 1, k) == rwa_moment_closed(n, k));
  }
  for (std::uint64_t twice = 0; twice <= 7; ++twice) {
    for (unsigned k = 0; k <= 5; ++k) {
      CHECK(psc_moment(twice, k).to_double() ==
            doctest::Approx(psc_moment_quadrature(twice / 2.0, k)).epsilon(1e-10));
    }
  }
}

TEST_CASE("closed-form moments decrease in k") {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::uint64_t k = 1; k < 10; ++k) CHECK(rwa_moment_closed(n, k + 1) < rwa_moment_closed(n, k));
  }
}

TEST_CASE("Hankel matrix of the moment sequence is positive semidefinite") {
  for (std::size_t n = 2; n <= 8; ++n) {
    std::vector<Rational> m(9);
    for (std::uint64_t r = 0; r <= 8; ++r) m[r] = r % 2 ? Rational(0) : rwa_moment_closed(n, r / 2);
    std::vector<std::vector<Rational>> hankel(5, std::vector<Rational>(5));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) hankel[i][j] = m[i + j];
    for (const auto &minor : leading_minors(hankel)) CHECK(minor.sign() >= 0);
  }
}

TEST_CASE("moment reports") {
  const auto r31 = moment_report(rwa::RwaSpec(3, 1.0), 1);
  CHECK(r31.closed_form == q(1, 4));
  CHECK(r31.oracle == q(1, 4));
  CHECK(r31.exact_agreement());
  CHECK_FALSE(r31.empirical.has_value());
  CHECK(r31.within_band());

  const auto r20 = moment_report(rwa::RwaSpec(2, 1.0), 0);
  CHECK(r20.closed_form == Rational(1));
  CHECK(r20.oracle == Rational(1));

  const auto scaled = moment_report(rwa::RwaSpec(3, 2.0), 1);
  CHECK(scaled.expected() == doctest::Approx(1.0));

  const auto mc = moment_report(rwa::RwaSpec(4, 1.0), 2, 1'000'000, 2024);
  CHECK(mc.oracle == q(3, 35));
  REQUIRE(mc.empirical.has_value());
  CHECK(*mc.std_error > 0.0);
  CHECK(std::fabs(*mc.empirical - 3.0 / 35.0) <= 4.0 * *mc.std_error);
  CHECK(mc.within_band());
}
