#include "rwa/io.hpp"

#include <fmt/format.h>
#include <openssl/evp.h>

#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rwa::io {

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

void write_values_csv(std::ostream &os, std::span<const double> values) {
  os << "value\n";
  for (double v : values) {
    os << format_double(v) << '\n';
  }
}

void write_weights_csv(std::ostream &os, std::span<const dist::WeightVector> rows) {
  if (rows.empty()) {
    return;
  }
  const std::size_t n = rows.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    os << (i ? "," : "") << 'w' << (i + 1);
  }
  os << '\n';
  for (const auto &row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << format_double(row[i]);
    }
    os << '\n';
  }
}

std::string values_digest(std::span<const double> values) {
  std::ostringstream csv;
  write_values_csv(csv, values);
  const std::string bytes = csv.str();

  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md, &len) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex += fmt::format("{:02x}", md[i]);
  }
  return hex;
}

Json rational_json(const Rational &q) {
  Json j;
  j["num"] = q.numerator().str();
  j["den"] = q.denominator().str();
  j["decimal"] = q.to_decimal(30);
  return j;
}

Json spec_json(const RwaSpec &spec) {
  Json j;
  j["n"] = spec.n();
  j["a"] = spec.a();
  return j;
}

Json batch_envelope(const SampleBatch &batch) {
  Json j;
  j["spec"] = spec_json(batch.spec);
  j["seed"] = batch.seed;
  j["count"] = batch.count();
  j["shards"] = batch.shards;
  j["values_digest"] = "sha256:" + values_digest(batch.values);
  return j;
}

Json moment_report_json(const moments::MomentReport &report) {
  Json j;
  j["spec"] = spec_json(report.spec);
  j["r"] = report.order.r();
  j["k"] = report.order.k();
  j["closed_form"] = rational_json(report.closed_form);
  j["oracle"] = rational_json(report.oracle);
  j["exact_agreement"] = report.exact_agreement();
  j["expected"] = report.expected();
  if (report.empirical) {
    j["empirical"] = *report.empirical;
    j["std_error"] = *report.std_error;
    j["within_band"] = report.within_band();
  } else {
    j["empirical"] = nullptr;
    j["std_error"] = nullptr;
  }
  return j;
}

} // namespace rwa::io
