#pragma once

/**
 * @file moments.hpp
 * @brief Exact moments of the randomly weighted arcsine average.
 *
 * Three routes, all in exact rationals and all at unit scale (multiply by
 * a^r for half-width a):
 *
 *  - closed form: E(S_n^{2k}) = (1/2)^{(k)} / ((n+1)/2)^{(k)}, where q^{(k)} is
 *    the rising factorial; checked internally against the equivalent form
 *    (2k)! (n-1)! / ((2k+n-1)! k!) * (n/2)^{(k)};
 *  - oracle: the multinomial expansion of E(S_n^r) summed over all
 *    compositions of r, with Dirichlet(1,...,1) joint moments of the weights
 *    and arcsine moments of the summands;
 *  - the Dirichlet-multinomial identity sum_c multinomial(r, c) prod_j
 *    a_j^{(i_j)} = (sum_j a_j)^{(r)}, evaluated on both sides.
 */

#include "rwa/exact_math.hpp"
#include "rwa/rational.hpp"
#include "rwa/sampler.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rwa::moments {

/// Moment order r; k = r / 2 when r is even.
class MomentOrder {
public:
  explicit MomentOrder(std::uint64_t r) : r_(r) {}
  static MomentOrder even(std::uint64_t k) { return MomentOrder(2 * k); }
  std::uint64_t r() const noexcept { return r_; }
  bool is_even() const noexcept { return r_ % 2 == 0; }
  std::uint64_t k() const noexcept { return r_ / 2; }

private:
  std::uint64_t r_;
};

class DirichletParams {
public:
  explicit DirichletParams(std::vector<exact::HalfInteger> params);
  std::span<const exact::HalfInteger> params() const noexcept { return params_; }
  std::size_t size() const noexcept { return params_.size(); }
  exact::HalfInteger total() const;

private:
  std::vector<exact::HalfInteger> params_;
};

Rational lemma_lhs(const DirichletParams &d, std::uint64_t r);
Rational lemma_rhs(const DirichletParams &d, std::uint64_t r);

/// (1/2)^{(k)} / ((n+1)/2)^{(k)}. Throws std::logic_error if the
/// intermediate form disagrees.
Rational rwa_moment_closed(std::size_t n, std::uint64_t k);

/// (2k)! (n-1)! / ((2k+n-1)! k!) * (n/2)^{(k)}.
Rational rwa_moment_closed_intermediate(std::size_t n, std::uint64_t k);

struct OracleOptions {
  /// Workers for the composition sum; partial sums are split by the value
  /// of the first part and added back in a fixed order.
  std::size_t threads = 1;
  /// Evaluate the parity factor (1 + (-1)^i)/2 on every composition instead
  /// of skipping compositions with an odd part.
  bool literal_parity = false;
};

/// Exact E(S_n^r) at a = 1 by enumerating every composition of r into n parts.
Rational rwa_moment_oracle(std::size_t n, std::uint64_t r, const OracleOptions &opts = {});

/// Compositions enumerated by the oracle: binomial(r + n - 1, n - 1).
BigInt oracle_term_count(std::size_t n, std::uint64_t r);

/// E(R_1^{i_1} ... R_n^{i_n}) for Dirichlet(1,...,1) weights:
/// (n-1)! prod i_j! / (r + n - 1)!.
Rational dirichlet_joint_moment(std::span<const std::uint64_t> parts);

/// (1/2)^{(k)} / (lambda+1)^{(k)} for lambda = twice_lambda / 2.
Rational psc_moment(std::uint64_t twice_lambda, std::uint64_t k);

/// Empirical r-th raw moment of a sample.
double empirical_moment(std::span<const double> values, std::uint64_t r);

/// Band multiplier for Monte Carlo moment checks.
inline constexpr double kStdErrorBand = 4.0;

struct MomentReport {
  RwaSpec spec;
  MomentOrder order;
  Rational closed_form; // unit scale
  Rational oracle;      // unit scale
  std::optional<double> empirical;
  std::optional<double> std_error;

  /// closed_form * a^r as a double.
  double expected() const;
  bool exact_agreement() const { return closed_form == oracle; }
  /// True when no Monte Carlo data is present, otherwise
  /// |empirical - expected| <= 4 * std_error.
  bool within_band() const;
};

/// Exact fields only, or with a Monte Carlo estimate from rwa_batch(spec,
/// mc_count, seed, shards, threads) when mc_count is given.
MomentReport moment_report(const RwaSpec &spec, std::uint64_t k, std::optional<std::size_t> mc_count = std::nullopt,
                           std::uint64_t seed = 0, std::size_t shards = 1, std::size_t threads = 1);

/// Exact fields plus the empirical 2k-th moment of an existing sample,
/// with standard error sqrt((m_{4k} - m_{2k}^2) / N).
MomentReport moment_report_from_sample(const RwaSpec &spec, std::uint64_t k, std::span<const double> values);

} // namespace rwa::moments
