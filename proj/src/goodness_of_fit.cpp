#include "rwa/goodness_of_fit.hpp"

#include "rwa/error.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace rwa::gof {

double ks_coefficient(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParameterError("alpha must lie in (0, 1)");
  }
  if (alpha == 0.01) {
    return 1.628;
  }
  return std::sqrt(-0.5 * std::log(alpha / 2.0));
}

double ks_critical(double alpha, std::size_t n) {
  return ks_coefficient(alpha) / std::sqrt(static_cast<double>(n));
}

double ks_critical_two_sample(double alpha, std::size_t n, std::size_t m) {
  const double nn = static_cast<double>(n);
  const double mm = static_cast<double>(m);
  return ks_coefficient(alpha) * std::sqrt((nn + mm) / (nn * mm));
}

double ks_statistic(std::span<const double> sample, const std::function<double(double)> &cdf) {
  if (sample.empty()) {
    throw ParameterError("KS statistic of an empty sample");
  }
  std::vector<double> xs(sample.begin(), sample.end());
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_statistic_two_sample(std::span<const double> lhs, std::span<const double> rhs) {
  if (lhs.empty() || rhs.empty()) {
    throw ParameterError("KS statistic of an empty sample");
  }
  std::vector<double> a(lhs.begin(), lhs.end());
  std::vector<double> b(rhs.begin(), rhs.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

} // namespace rwa::gof
