#pragma once

// Kolmogorov-Smirnov statistics with the asymptotic critical value
// c(alpha) * sqrt(1/N), c(0.01) = 1.628.

#include <functional>
#include <span>

namespace rwa::gof {

/// c(alpha) = sqrt(-ln(alpha/2) / 2); 1.628 at alpha = 0.01 (tabulated value).
double ks_coefficient(double alpha);

/// One-sample critical value c(alpha) / sqrt(n).
double ks_critical(double alpha, std::size_t n);

/// Two-sample critical value c(alpha) * sqrt((n + m) / (n m)).
double ks_critical_two_sample(double alpha, std::size_t n, std::size_t m);

/// sup_x |F_n(x) - F(x)|. The sample is copied and sorted.
double ks_statistic(std::span<const double> sample, const std::function<double(double)> &cdf);

/// sup_x |F_n(x) - G_m(x)|.
double ks_statistic_two_sample(std::span<const double> lhs, std::span<const double> rhs);

} // namespace rwa::gof
