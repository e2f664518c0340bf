#pragma once

/**
 * @file distributions.hpp
 * @brief Arcsine(a), PowerSemicircle(lambda, a) and uniform spacings.
 *
 * The power semicircle law on (-a, a) has density
 *
 *     f(x; lambda, a) = Gamma(lambda+1) / (sqrt(pi) Gamma(lambda+1/2) a^(2 lambda))
 *                       * (a^2 - x^2)^(lambda - 1/2),
 *
 * and (X + a) / (2a) ~ Beta(lambda+1/2, lambda+1/2). The CDF and the
 * reference sampler both go through that Beta representation. lambda = 0 is
 * the arcsine law, lambda = 1/2 the uniform law, lambda = 1 Wigner's
 * semicircle.
 */

#include "rwa/rational.hpp"
#include "rwa/rng.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rwa::dist {

class ArcsineParams {
public:
  explicit ArcsineParams(double a);
  double a() const noexcept { return a_; }

private:
  double a_;
};

class PowerSemicircleParams {
public:
  PowerSemicircleParams(double lambda, double a);
  double lambda() const noexcept { return lambda_; }
  double a() const noexcept { return a_; }
  /// Beta shape parameter lambda + 1/2 of the rescaled law.
  double beta_shape() const noexcept { return lambda_ + 0.5; }
  /// Density normalizing constant, including the a^(-2 lambda) factor.
  double normalizer() const noexcept { return norm_; }

private:
  double lambda_;
  double a_;
  double norm_;
};

/// Non-negative weights summing to one (within 1e-12).
class WeightVector {
public:
  explicit WeightVector(std::vector<double> weights);
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

private:
  std::vector<double> weights_;
};

enum class SpacingsMethod {
  sorted_uniforms,      // sort n-1 uniforms and difference (default)
  normalized_exponentials,
};

double arcsine_pdf(const ArcsineParams &p, double x);
double arcsine_cdf(const ArcsineParams &p, double x);
/// E(X^i) / a^i, exact: 0 for odd i, binomial(2m, m) / 4^m for i = 2m.
Rational arcsine_moment(std::uint64_t i);
/// a * cos(pi U), U uniform on [0, 1). Consumes one 64-bit draw.
double arcsine_sample(const ArcsineParams &p, Rng &rng);

double psc_pdf(const PowerSemicircleParams &p, double x);
double psc_cdf(const PowerSemicircleParams &p, double x);
double psc_sample(const PowerSemicircleParams &p, Rng &rng);

WeightVector spacings_sample(std::size_t n, Rng &rng, SpacingsMethod method = SpacingsMethod::sorted_uniforms);

/// Regularized incomplete beta I_x(alpha, beta) by modified Lentz continued
/// fraction; absolute accuracy ~1e-12 for moderate shapes.
double regularized_incomplete_beta(double alpha, double beta, double x);

} // namespace rwa::dist
