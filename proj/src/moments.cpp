#include "rwa/moments.hpp"

#include "rwa/distributions.hpp"
#include "rwa/error.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace rwa::moments {

using exact::HalfInteger;
using exact::rising_gamma_ratio;

DirichletParams::DirichletParams(std::vector<HalfInteger> params) : params_(std::move(params)) {
  if (params_.empty()) {
    throw ParameterError("Dirichlet parameter list is empty");
  }
}

HalfInteger DirichletParams::total() const {
  HalfInteger sum = params_.front();
  for (std::size_t j = 1; j < params_.size(); ++j) {
    sum = sum + params_[j];
  }
  return sum;
}

Rational lemma_lhs(const DirichletParams &d, std::uint64_t r) {
  Rational sum;
  for (const auto &c : exact::Compositions(r, d.size())) {
    Rational term(exact::multinomial(r, c));
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] > 0) {
        term *= rising_gamma_ratio(d.params()[j], c[j]);
      }
    }
    sum += term;
  }
  return sum;
}

Rational lemma_rhs(const DirichletParams &d, std::uint64_t r) { return rising_gamma_ratio(d.total(), r); }

Rational rwa_moment_closed_intermediate(std::size_t n, std::uint64_t k) {
  if (n < 2) {
    throw ParameterError("RWA needs n >= 2");
  }
  Rational lead(exact::factorial(2 * k) * exact::factorial(n - 1),
                exact::factorial(2 * k + n - 1) * exact::factorial(k));
  return lead * rising_gamma_ratio(HalfInteger::from_twice(n), k);
}

Rational rwa_moment_closed(std::size_t n, std::uint64_t k) {
  if (n < 2) {
    throw ParameterError("RWA needs n >= 2");
  }
  Rational value =
      rising_gamma_ratio(HalfInteger::from_twice(1), k) / rising_gamma_ratio(HalfInteger::from_twice(n + 1), k);
  if (value != rwa_moment_closed_intermediate(n, k)) {
    throw std::logic_error("closed-form moment expressions disagree at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k));
  }
  return value;
}

Rational dirichlet_joint_moment(std::span<const std::uint64_t> parts) {
  const std::size_t n = parts.size();
  std::uint64_t r = 0;
  BigInt num = exact::factorial(n - 1);
  for (auto i : parts) {
    r += i;
    num *= exact::factorial(i);
  }
  return Rational(num, exact::factorial(r + n - 1));
}

namespace {

Rational parity_factor(std::uint64_t i) { return i % 2 == 0 ? Rational(1) : Rational(0); }

// Sum over compositions of r with a fixed first part.
Rational oracle_slice(std::size_t n, std::uint64_t r, std::uint64_t first, bool literal) {
  Rational sum;
  exact::Composition parts(n);
  parts[0] = first;
  auto add_term = [&](const exact::Composition &c) {
    if (!literal) {
      for (auto i : c) {
        if (i % 2 == 1) return;
      }
    }
    Rational term = Rational(exact::multinomial(r, c)) * dirichlet_joint_moment(c);
    for (auto i : c) {
      if (literal) {
        const Rational p = parity_factor(i);
        term *= p;
        if (p.is_zero()) break;
      }
      term *= dist::arcsine_moment(i);
    }
    sum += term;
  };
  if (n == 1) {
    if (first == r) add_term(parts);
    return sum;
  }
  for (const auto &rest : exact::Compositions(r - first, n - 1)) {
    std::copy(rest.begin(), rest.end(), parts.begin() + 1);
    add_term(parts);
  }
  return sum;
}

} // namespace

Rational rwa_moment_oracle(std::size_t n, std::uint64_t r, const OracleOptions &opts) {
  if (n < 2) {
    throw ParameterError("RWA needs n >= 2");
  }
  std::vector<Rational> partial(r + 1);
  const std::size_t workers = std::clamp<std::size_t>(opts.threads, 1, r + 1);
  auto run = [&](std::size_t w) {
    for (std::uint64_t first = w; first <= r; first += workers) {
      partial[first] = oracle_slice(n, r, first, opts.literal_parity);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(run, w);
    }
  }
  Rational total;
  for (std::uint64_t first = r + 1; first-- > 0;) {
    total += partial[first];
  }
  return total;
}

BigInt oracle_term_count(std::size_t n, std::uint64_t r) { return exact::binomial(r + n - 1, n - 1); }

Rational psc_moment(std::uint64_t twice_lambda, std::uint64_t k) {
  return rising_gamma_ratio(HalfInteger::from_twice(1), k) /
         rising_gamma_ratio(HalfInteger::from_twice(twice_lambda + 2), k);
}

double empirical_moment(std::span<const double> values, std::uint64_t r) {
  if (values.empty()) {
    throw ParameterError("empirical moment of an empty sample");
  }
  double sum = 0.0;
  for (double v : values) {
    sum += std::pow(v, static_cast<double>(r));
  }
  return sum / static_cast<double>(values.size());
}

double MomentReport::expected() const {
  return closed_form.to_double() * std::pow(spec.a(), static_cast<double>(order.r()));
}

bool MomentReport::within_band() const {
  if (!empirical || !std_error) {
    return true;
  }
  return std::fabs(*empirical - expected()) <= kStdErrorBand * *std_error;
}

MomentReport moment_report_from_sample(const RwaSpec &spec, std::uint64_t k, std::span<const double> values) {
  MomentReport report{spec, MomentOrder::even(k), rwa_moment_closed(spec.n(), k),
                      rwa_moment_oracle(spec.n(), 2 * k), std::nullopt, std::nullopt};
  if (!values.empty()) {
    const double m2k = empirical_moment(values, 2 * k);
    const double m4k = empirical_moment(values, 4 * k);
    report.empirical = m2k;
    report.std_error = std::sqrt(std::max(0.0, m4k - m2k * m2k) / static_cast<double>(values.size()));
  }
  return report;
}

MomentReport moment_report(const RwaSpec &spec, std::uint64_t k, std::optional<std::size_t> mc_count,
                           std::uint64_t seed, std::size_t shards, std::size_t threads) {
  if (!mc_count) {
    return moment_report_from_sample(spec, k, {});
  }
  const auto batch = rwa_batch(spec, *mc_count, seed, shards, threads);
  return moment_report_from_sample(spec, k, batch.values);
}

} // namespace rwa::moments
