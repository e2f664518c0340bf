#pragma once

// CSV and JSON encodings. CSV: ',' delimiter, '.' decimal point, LF line
// endings, doubles printed with 17 significant digits so they round-trip.
// JSON objects keep insertion order.

#include "rwa/distributions.hpp"
#include "rwa/moments.hpp"
#include "rwa/rational.hpp"
#include "rwa/sampler.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rwa::io {

using Json = nlohmann::ordered_json;

std::string format_double(double v);

/// Header `value`, then one value per line.
void write_values_csv(std::ostream &os, std::span<const double> values);

/// Header `w1,...,wn`, then one weight vector per line.
void write_weights_csv(std::ostream &os, std::span<const dist::WeightVector> rows);

/// Hex SHA-256 of the bytes write_values_csv would produce.
std::string values_digest(std::span<const double> values);

/// {"num": "...", "den": "...", "decimal": "<30 significant digits>"}
Json rational_json(const Rational &q);

Json spec_json(const RwaSpec &spec);

/// {"spec", "seed", "count", "shards", "values_digest"}
Json batch_envelope(const SampleBatch &batch);

Json moment_report_json(const moments::MomentReport &report);

} // namespace rwa::io
