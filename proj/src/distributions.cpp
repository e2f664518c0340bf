#include "rwa/distributions.hpp"

#include "rwa/error.hpp"
#include "rwa/exact_math.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace rwa::dist {

namespace {

constexpr double kWeightSumTolerance = 1e-12;
constexpr double kBetaCfEpsilon = 1e-15;
constexpr int kBetaCfMaxIter = 500;
constexpr double kTiny = 1e-300;

double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kBetaCfMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kBetaCfEpsilon) {
      return h;
    }
  }
  return h;
}

} // namespace

ArcsineParams::ArcsineParams(double a) : a_(a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw ParameterError("arcsine half-width must be positive, got " + std::to_string(a));
  }
}

PowerSemicircleParams::PowerSemicircleParams(double lambda, double a) : lambda_(lambda), a_(a) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("power semicircle lambda must be >= 0, got " + std::to_string(lambda));
  }
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw ParameterError("power semicircle half-width must be positive, got " + std::to_string(a));
  }
  norm_ = std::exp(std::lgamma(lambda + 1.0) - std::lgamma(lambda + 0.5) - 0.5 * std::log(std::numbers::pi) -
                   2.0 * lambda * std::log(a));
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) {
      throw ParameterError("weights must be non-negative");
    }
    sum += w;
  }
  if (weights_.empty() || std::fabs(sum - 1.0) > kWeightSumTolerance) {
    throw ParameterError("weights must sum to 1");
  }
}

double arcsine_pdf(const ArcsineParams &p, double x) {
  const double a = p.a();
  if (!(std::fabs(x) < a)) {
    throw DomainError("arcsine density undefined at |x| >= a");
  }
  return 1.0 / (std::numbers::pi * std::sqrt((a - x) * (a + x)));
}

double arcsine_cdf(const ArcsineParams &p, double x) {
  if (x <= -p.a()) return 0.0;
  if (x >= p.a()) return 1.0;
  return 0.5 + std::asin(x / p.a()) / std::numbers::pi;
}

Rational arcsine_moment(std::uint64_t i) {
  if (i % 2 == 1) {
    return Rational(0);
  }
  const std::uint64_t m = i / 2;
  return exact::rising_gamma_ratio(exact::HalfInteger::from_twice(1), m) / Rational(exact::factorial(m));
}

double arcsine_sample(const ArcsineParams &p, Rng &rng) {
  return p.a() * std::cos(std::numbers::pi * rng.uniform());
}

double psc_pdf(const PowerSemicircleParams &p, double x) {
  const double a = p.a();
  const double ax = std::fabs(x);
  if (ax > a || std::isnan(x)) {
    throw DomainError("power semicircle density undefined outside [-a, a]");
  }
  const double exponent = p.lambda() - 0.5;
  if (ax == a) {
    if (exponent < 0.0) {
      throw DomainError("power semicircle density diverges at |x| = a for lambda < 1/2");
    }
    return exponent == 0.0 ? p.normalizer() : 0.0;
  }
  return p.normalizer() * std::pow((a - x) * (a + x), exponent);
}

double psc_cdf(const PowerSemicircleParams &p, double x) {
  if (x <= -p.a()) return 0.0;
  if (x >= p.a()) return 1.0;
  const double t = std::clamp((x + p.a()) / (2.0 * p.a()), 0.0, 1.0);
  return regularized_incomplete_beta(p.beta_shape(), p.beta_shape(), t);
}

double psc_sample(const PowerSemicircleParams &p, Rng &rng) {
  std::gamma_distribution<double> gamma(p.beta_shape(), 1.0);
  const double g1 = gamma(rng);
  const double g2 = gamma(rng);
  const double b = g1 / (g1 + g2);
  return std::clamp(2.0 * p.a() * b - p.a(), -p.a(), p.a());
}

WeightVector spacings_sample(std::size_t n, Rng &rng, SpacingsMethod method) {
  if (n < 2) {
    throw ParameterError("spacings need n >= 2, got " + std::to_string(n));
  }
  std::vector<double> w(n);
  if (method == SpacingsMethod::sorted_uniforms) {
    std::vector<double> u(n - 1);
    for (auto &v : u) {
      v = rng.uniform();
    }
    std::sort(u.begin(), u.end());
    double prev = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      w[i] = u[i] - prev;
      prev = u[i];
    }
    w[n - 1] = 1.0 - prev;
  } else {
    double total = 0.0;
    for (auto &v : w) {
      v = -std::log1p(-rng.uniform());
      total += v;
    }
    for (auto &v : w) {
      v /= total;
    }
  }
  return WeightVector(std::move(w));
}

double regularized_incomplete_beta(double alpha, double beta, double x) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw ParameterError("incomplete beta shapes must be positive");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("incomplete beta argument outside [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(alpha + beta) - std::lgamma(alpha) - std::lgamma(beta) +
                           alpha * std::log(x) + beta * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (alpha + 1.0) / (alpha + beta + 2.0)) {
    return front * beta_continued_fraction(alpha, beta, x) / alpha;
  }
  return 1.0 - front * beta_continued_fraction(beta, alpha, 1.0 - x) / beta;
}

} // namespace rwa::dist
