#pragma once

#include "rwa/io.hpp"
#include "rwa/moments.hpp"
#include "rwa/sampler.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rwa::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1, // checks ran and failed, or I/O error
  kExitUsage = 2,
};

/// Above this many enumerated compositions the moment command warns.
inline constexpr std::uint64_t kOracleTermWarning = 10'000'000;

struct VerifyConfig {
  RwaSpec spec;
  std::size_t sample_count = 100'000;
  std::uint64_t seed = 7;
  std::uint64_t max_moment_k = 3;
  double alpha = 0.01;
  std::size_t shards = 1;
  std::size_t threads = 1;
  /// Test-only: compare against this lambda instead of (n - 1) / 2.
  std::optional<double> lambda_override;

  /// Throws ParameterError unless sample_count >= 100 and 0 < alpha < 1.
  void validate() const;
};

struct VerifyOutcome {
  double ks_statistic = 0.0;
  double ks_critical = 0.0;
  bool ks_pass = false;
  std::vector<moments::MomentReport> moment_rows;
  bool overall_pass = false;
};

VerifyOutcome run_verify(const VerifyConfig &cfg);
io::Json verify_json(const VerifyConfig &cfg, const VerifyOutcome &outcome);

struct HistogramRow {
  double bin_center;
  double empirical_density;
  double theoretical_density;
};

/// Rice rule: ceil(2 N^(1/3)).
std::size_t default_bin_count(std::size_t sample_count);

/// Equal-width density histogram of `values` over [-a, a] next to the
/// power semicircle density with lambda = (n - 1) / 2 at each bin center.
std::vector<HistogramRow> histogram_rows(const RwaSpec &spec, std::span<const double> values, std::size_t bins);

/// Worker cap: RWA_THREADS if set and positive, else hardware concurrency.
std::size_t worker_threads();

/// Runs one CLI invocation; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rwa::cli
