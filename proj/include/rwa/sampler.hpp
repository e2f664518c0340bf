#pragma once

/**
 * @file sampler.hpp
 * @brief Randomly weighted averages S_n = R_1 X_1 + ... + R_n X_n.
 *
 * The weights are uniform spacings (Dirichlet(1,...,1)) and the X_i are
 * i.i.d. Arcsine(a), independent of the weights. Each draw consumes the
 * generator in a fixed order: n-1 uniforms for the weights, then one
 * uniform for each of X_1 ... X_n.
 */

#include "rwa/distributions.hpp"
#include "rwa/rng.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rwa {

class RwaSpec {
public:
  RwaSpec(std::size_t n, double a);
  std::size_t n() const noexcept { return n_; }
  double a() const noexcept { return a_; }
  /// lambda = (n - 1) / 2 of the limiting power semicircle law.
  double lambda() const noexcept { return (static_cast<double>(n_) - 1.0) / 2.0; }

private:
  std::size_t n_;
  double a_;
};

struct SampleBatch {
  RwaSpec spec;
  std::uint64_t seed;
  std::size_t shards;
  std::vector<double> values;

  std::size_t count() const noexcept { return values.size(); }
};

/// Convex combination sum_i w_i x_i, evaluated as x_n + sum_{i<n} w_i (x_i - x_n)
/// and clamped to [min x, max x]. Equal inputs c give exactly c.
double weighted_average(const dist::WeightVector &weights, std::span<const double> x);

double rwa_sample(const RwaSpec &spec, Rng &rng);

/// `count` draws split into `shards` contiguous shards; shard s uses
/// Rng::stream(seed, s) and the shards are concatenated in order, so the
/// result depends on (spec, count, seed, shards) only. `threads` caps the
/// number of shards generated concurrently.
SampleBatch rwa_batch(const RwaSpec &spec, std::size_t count, std::uint64_t seed, std::size_t shards = 1,
                      std::size_t threads = 1);

/// Sizes of the shards used by rwa_batch: the first count % shards get one extra.
std::vector<std::size_t> shard_sizes(std::size_t count, std::size_t shards);

} // namespace rwa
