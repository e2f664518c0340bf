#include "rwa/sampler.hpp"

#include "rwa/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

namespace rwa {

RwaSpec::RwaSpec(std::size_t n, double a) : n_(n), a_(a) {
  if (n < 2) {
    throw ParameterError("RWA needs n >= 2, got " + std::to_string(n));
  }
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw ParameterError("RWA half-width must be positive, got " + std::to_string(a));
  }
}

double weighted_average(const dist::WeightVector &weights, std::span<const double> x) {
  if (x.size() != weights.size() || x.empty()) {
    throw ParameterError("weight and value counts differ");
  }
  const std::size_t last = x.size() - 1;
  double s = x[last];
  for (std::size_t i = 0; i < last; ++i) {
    s += weights[i] * (x[i] - x[last]);
  }
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return std::clamp(s, *lo, *hi);
}

double rwa_sample(const RwaSpec &spec, Rng &rng) {
  static const dist::ArcsineParams unit(1.0);
  const auto weights = dist::spacings_sample(spec.n(), rng);
  // Summands are drawn at unit scale and the average rescaled once, which
  // keeps batches at different a exact multiples of each other.
  std::vector<double> x(spec.n());
  for (auto &v : x) {
    v = dist::arcsine_sample(unit, rng);
  }
  return spec.a() * weighted_average(weights, x);
}

std::vector<std::size_t> shard_sizes(std::size_t count, std::size_t shards) {
  if (shards == 0) {
    throw ParameterError("shard count must be >= 1");
  }
  std::vector<std::size_t> sizes(shards, count / shards);
  for (std::size_t s = 0; s < count % shards; ++s) {
    ++sizes[s];
  }
  return sizes;
}

SampleBatch rwa_batch(const RwaSpec &spec, std::size_t count, std::uint64_t seed, std::size_t shards,
                      std::size_t threads) {
  if (count == 0) {
    throw ParameterError("batch count must be >= 1");
  }
  const auto sizes = shard_sizes(count, shards);
  std::vector<std::size_t> offsets(shards, 0);
  for (std::size_t s = 1; s < shards; ++s) {
    offsets[s] = offsets[s - 1] + sizes[s - 1];
  }

  SampleBatch batch{spec, seed, shards, std::vector<double>(count)};
  auto run_shard = [&](std::size_t s) {
    Rng rng = Rng::stream(seed, s);
    double *out = batch.values.data() + offsets[s];
    for (std::size_t i = 0; i < sizes[s]; ++i) {
      out[i] = rwa_sample(spec, rng);
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, shards);
  if (workers == 1) {
    for (std::size_t s = 0; s < shards; ++s) {
      run_shard(s);
    }
    return batch;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t s = w; s < shards; s += workers) {
        run_shard(s);
      }
    });
  }
  pool.clear();
  return batch;
}

} // namespace rwa
