#include "rwa/cli.hpp"

#include "rwa/distributions.hpp"
#include "rwa/error.hpp"
#include "rwa/goodness_of_fit.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace rwa::cli {

namespace {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string &path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  return f;
}

void finish_output(std::ofstream &f, const std::string &path) {
  f.flush();
  if (!f) {
    throw IoError("write to '" + path + "' failed");
  }
}

// Writes through `fill` to `path`, or to `out` when path is empty.
template <class Fill> void emit(const std::string &path, std::ostream &out, Fill &&fill) {
  if (path.empty()) {
    fill(out);
    return;
  }
  auto f = open_output(path);
  fill(f);
  finish_output(f, path);
}

std::vector<std::string> split_commas(const std::string &s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    parts.push_back(item);
  }
  if (!s.empty() && s.back() == ',') {
    parts.emplace_back();
  }
  return parts;
}

struct MomentArgs {
  std::size_t n = 0;
  std::uint64_t k_max = 0;
  std::string a = "1";
  std::string format = "table";
};

int cmd_moment(const MomentArgs &args, std::ostream &out, std::ostream &err) {
  if (args.n < 2) {
    throw ParameterError("--n must be >= 2");
  }
  const Rational a = Rational::parse(args.a);
  if (a.sign() <= 0) {
    throw ParameterError("--a must be positive");
  }
  const auto terms = moments::oracle_term_count(args.n, 2 * args.k_max);
  if (terms > kOracleTermWarning) {
    err << "warning: oracle enumerates " << terms.str() << " compositions at k=" << args.k_max << "\n";
  }

  const moments::OracleOptions opts{worker_threads(), false};
  struct Row {
    std::uint64_t k;
    Rational closed;
    Rational oracle;
  };
  std::vector<Row> rows;
  bool all_equal = true;
  for (std::uint64_t k = 0; k <= args.k_max; ++k) {
    const Rational scale = a.pow(static_cast<unsigned>(2 * k));
    Row row{k, moments::rwa_moment_closed(args.n, k) * scale, moments::rwa_moment_oracle(args.n, 2 * k, opts) * scale};
    all_equal = all_equal && row.closed == row.oracle;
    rows.push_back(std::move(row));
  }

  if (args.format == "json") {
    io::Json j;
    j["n"] = args.n;
    j["a"] = a.str();
    j["k_max"] = args.k_max;
    j["rows"] = io::Json::array();
    for (const auto &row : rows) {
      io::Json r;
      r["k"] = row.k;
      r["closed_form"] = io::rational_json(row.closed);
      r["oracle"] = io::rational_json(row.oracle);
      r["equal"] = row.closed == row.oracle;
      j["rows"].push_back(std::move(r));
    }
    j["all_equal"] = all_equal;
    out << j.dump(2) << "\n";
  } else if (args.format == "csv") {
    out << "k,closed_form,oracle,decimal,equal\n";
    for (const auto &row : rows) {
      out << row.k << ',' << row.closed << ',' << row.oracle << ',' << row.closed.to_decimal(30) << ','
          << (row.closed == row.oracle ? "true" : "false") << '\n';
    }
  } else {
    out << fmt::format("{:>4}  {:>24}  {:>24}  {:>34}  {}\n", "k", "closed_form", "oracle", "decimal", "equal");
    for (const auto &row : rows) {
      out << fmt::format("{:>4}  {:>24}  {:>24}  {:>34}  {}\n", row.k, row.closed.str(), row.oracle.str(),
                         row.closed.to_decimal(30), row.closed == row.oracle ? "yes" : "NO");
    }
  }
  return all_equal ? kExitOk : kExitFailed;
}

struct LemmaArgs {
  std::string params;
  std::uint64_t r_max = 4;
  std::string format = "table";
};

int cmd_lemma_check(const LemmaArgs &args, std::ostream &out) {
  std::vector<exact::HalfInteger> params;
  for (const auto &tok : split_commas(args.params)) {
    params.push_back(exact::HalfInteger::parse(tok));
  }
  const moments::DirichletParams d(std::move(params));

  bool all_equal = true;
  io::Json rows = io::Json::array();
  if (args.format == "table") {
    out << fmt::format("{:>4}  {:>28}  {:>28}  {}\n", "r", "lhs", "rhs", "equal");
  }
  for (std::uint64_t r = 0; r <= args.r_max; ++r) {
    const Rational lhs = moments::lemma_lhs(d, r);
    const Rational rhs = moments::lemma_rhs(d, r);
    const bool eq = lhs == rhs;
    all_equal = all_equal && eq;
    if (args.format == "json") {
      io::Json row;
      row["r"] = r;
      row["lhs"] = io::rational_json(lhs);
      row["rhs"] = io::rational_json(rhs);
      row["equal"] = eq;
      rows.push_back(std::move(row));
    } else {
      out << fmt::format("{:>4}  {:>28}  {:>28}  {}\n", r, lhs.str(), rhs.str(), eq ? "yes" : "NO");
    }
  }
  if (args.format == "json") {
    io::Json j;
    io::Json plist = io::Json::array();
    for (const auto &p : d.params()) {
      plist.push_back(p.str());
    }
    j["params"] = std::move(plist);
    j["r_max"] = args.r_max;
    j["rows"] = std::move(rows);
    j["all_equal"] = all_equal;
    out << j.dump(2) << "\n";
  }
  return all_equal ? kExitOk : kExitFailed;
}

struct SampleArgs {
  std::string source;
  std::size_t n = 2;
  double a = 1.0;
  double lambda = 1.0;
  std::size_t count = 1000;
  std::uint64_t seed = 42;
  std::size_t shards = 1;
  std::string method = "sorted";
  std::string out;
  std::string envelope;
};

int cmd_sample(const SampleArgs &args, std::ostream &out) {
  if (args.count == 0) {
    throw ParameterError("--count must be >= 1");
  }
  if (args.source == "rwa") {
    const auto batch = rwa_batch(RwaSpec(args.n, args.a), args.count, args.seed, args.shards, worker_threads());
    emit(args.out, out, [&](std::ostream &os) { io::write_values_csv(os, batch.values); });
    if (!args.envelope.empty()) {
      emit(args.envelope, out, [&](std::ostream &os) { os << io::batch_envelope(batch).dump(2) << "\n"; });
    }
    return kExitOk;
  }
  if (!args.envelope.empty()) {
    throw ParameterError("--envelope is only available for the rwa source");
  }

  Rng rng = Rng::stream(args.seed, 0);
  if (args.source == "spacings") {
    dist::SpacingsMethod method;
    if (args.method == "sorted") method = dist::SpacingsMethod::sorted_uniforms;
    else if (args.method == "exponential") method = dist::SpacingsMethod::normalized_exponentials;
    else throw ParameterError("--method must be 'sorted' or 'exponential'");
    std::vector<dist::WeightVector> rows;
    rows.reserve(args.count);
    for (std::size_t i = 0; i < args.count; ++i) {
      rows.push_back(dist::spacings_sample(args.n, rng, method));
    }
    emit(args.out, out, [&](std::ostream &os) { io::write_weights_csv(os, rows); });
    return kExitOk;
  }

  std::vector<double> values(args.count);
  if (args.source == "arcsine") {
    const dist::ArcsineParams p(args.a);
    for (auto &v : values) v = dist::arcsine_sample(p, rng);
  } else if (args.source == "psc") {
    const dist::PowerSemicircleParams p(args.lambda, args.a);
    for (auto &v : values) v = dist::psc_sample(p, rng);
  } else {
    throw ParameterError("unknown source '" + args.source + "'");
  }
  emit(args.out, out, [&](std::ostream &os) { io::write_values_csv(os, values); });
  return kExitOk;
}

struct VerifyArgs {
  std::size_t n = 3;
  double a = 1.0;
  std::size_t count = 100'000;
  std::uint64_t seed = 7;
  std::uint64_t k_max = 3;
  double alpha = 0.01;
  std::size_t shards = 1;
  std::optional<double> lambda_override;
  std::string out;
};

int cmd_verify(const VerifyArgs &args, std::ostream &out) {
  VerifyConfig cfg{RwaSpec(args.n, args.a), args.count, args.seed, args.k_max, args.alpha, args.shards,
                   worker_threads(), args.lambda_override};
  cfg.validate();
  const auto outcome = run_verify(cfg);
  const auto json = verify_json(cfg, outcome);
  if (!args.out.empty()) {
    emit(args.out, out, [&](std::ostream &os) { os << json.dump(2) << "\n"; });
  }
  out << fmt::format("KS D = {:.6g}, critical = {:.6g}: {}\n", outcome.ks_statistic, outcome.ks_critical,
                     outcome.ks_pass ? "pass" : "FAIL");
  for (const auto &row : outcome.moment_rows) {
    out << fmt::format("E S^{}: exact {} (~{:.10g}), empirical {:.10g} +/- {:.3g}: {}\n", row.order.r(),
                       row.closed_form.str(), row.expected(), row.empirical.value_or(NAN),
                       row.std_error.value_or(NAN), row.within_band() ? "pass" : "FAIL");
  }
  out << (outcome.overall_pass ? "overall: pass\n" : "overall: FAIL\n");
  return outcome.overall_pass ? kExitOk : kExitFailed;
}

struct PlotArgs {
  std::size_t n = 3;
  double a = 1.0;
  std::optional<std::size_t> bins;
  std::size_t count = 100'000;
  std::uint64_t seed = 1;
  std::size_t shards = 1;
  std::string out;
};

int cmd_plot_data(const PlotArgs &args, std::ostream &out) {
  const RwaSpec spec(args.n, args.a);
  if (args.count == 0) {
    throw ParameterError("--count must be >= 1");
  }
  const std::size_t bins = args.bins.value_or(default_bin_count(args.count));
  if (bins < 10) {
    throw ParameterError("--bins must be >= 10");
  }
  const auto batch = rwa_batch(spec, args.count, args.seed, args.shards, worker_threads());
  const auto rows = histogram_rows(spec, batch.values, bins);
  emit(args.out, out, [&](std::ostream &os) {
    os << "bin_center,empirical_density,theoretical_density\n";
    for (const auto &row : rows) {
      os << io::format_double(row.bin_center) << ',' << io::format_double(row.empirical_density) << ','
         << io::format_double(row.theoretical_density) << '\n';
    }
  });
  return kExitOk;
}

} // namespace

void VerifyConfig::validate() const {
  if (sample_count < 100) {
    throw ParameterError("sample count must be >= 100");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParameterError("alpha must lie in (0, 1)");
  }
  if (shards == 0) {
    throw ParameterError("shard count must be >= 1");
  }
}

VerifyOutcome run_verify(const VerifyConfig &cfg) {
  cfg.validate();
  const auto batch = rwa_batch(cfg.spec, cfg.sample_count, cfg.seed, cfg.shards, cfg.threads);
  const dist::PowerSemicircleParams null_law(cfg.lambda_override.value_or(cfg.spec.lambda()), cfg.spec.a());

  VerifyOutcome outcome;
  outcome.ks_statistic = gof::ks_statistic(batch.values, [&](double x) { return dist::psc_cdf(null_law, x); });
  outcome.ks_critical = gof::ks_critical(cfg.alpha, batch.count());
  outcome.ks_pass = outcome.ks_statistic < outcome.ks_critical;
  bool moments_pass = true;
  for (std::uint64_t k = 1; k <= cfg.max_moment_k; ++k) {
    auto row = moments::moment_report_from_sample(cfg.spec, k, batch.values);
    moments_pass = moments_pass && row.within_band() && row.exact_agreement();
    outcome.moment_rows.push_back(std::move(row));
  }
  outcome.overall_pass = outcome.ks_pass && moments_pass;
  return outcome;
}

io::Json verify_json(const VerifyConfig &cfg, const VerifyOutcome &outcome) {
  io::Json config;
  config["spec"] = io::spec_json(cfg.spec);
  config["sample_count"] = cfg.sample_count;
  config["seed"] = cfg.seed;
  config["shards"] = cfg.shards;
  config["max_moment_k"] = cfg.max_moment_k;
  config["alpha"] = cfg.alpha;
  config["lambda_tested"] = cfg.lambda_override.value_or(cfg.spec.lambda());
  config["lambda_override"] = cfg.lambda_override.has_value();

  io::Json j;
  j["config"] = std::move(config);
  j["ks"] = {{"statistic", outcome.ks_statistic}, {"critical", outcome.ks_critical}, {"pass", outcome.ks_pass}};
  j["moments"] = io::Json::array();
  for (const auto &row : outcome.moment_rows) {
    j["moments"].push_back(io::moment_report_json(row));
  }
  j["overall_pass"] = outcome.overall_pass;
  return j;
}

std::size_t default_bin_count(std::size_t sample_count) {
  return static_cast<std::size_t>(std::ceil(2.0 * std::cbrt(static_cast<double>(sample_count))));
}

std::vector<HistogramRow> histogram_rows(const RwaSpec &spec, std::span<const double> values, std::size_t bins) {
  if (bins == 0 || values.empty()) {
    throw ParameterError("histogram needs bins >= 1 and a non-empty sample");
  }
  const double a = spec.a();
  const double width = 2.0 * a / static_cast<double>(bins);
  std::vector<std::size_t> counts(bins, 0);
  for (double v : values) {
    auto idx = static_cast<std::ptrdiff_t>(std::floor((v + a) / width));
    idx = std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(bins) - 1);
    ++counts[static_cast<std::size_t>(idx)];
  }
  const dist::PowerSemicircleParams law(spec.lambda(), a);
  const double total = static_cast<double>(values.size());
  std::vector<HistogramRow> rows;
  rows.reserve(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    const double center = -a + (static_cast<double>(b) + 0.5) * width;
    rows.push_back({center, static_cast<double>(counts[b]) / (total * width), dist::psc_pdf(law, center)});
  }
  return rows;
}

std::size_t worker_threads() {
  if (const char *env = std::getenv("RWA_THREADS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return static_cast<std::size_t>(v);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Randomly weighted averages of arcsine variables and the power semicircle law", "rwa"};
  app.require_subcommand(1);

  MomentArgs moment;
  auto *moment_cmd = app.add_subcommand("moment", "Exact moment table: closed form vs composition-sum oracle");
  moment_cmd->add_option("--n", moment.n, "Number of summands (>= 2)")->required();
  moment_cmd->add_option("--k-max", moment.k_max, "Largest k of E(S^2k)");
  moment_cmd->add_option("--a", moment.a, "Half-width a as an exact literal (e.g. 5/2 or 2.5)");
  moment_cmd->add_option("--format", moment.format)->check(CLI::IsMember({"table", "csv", "json"}));

  LemmaArgs lemma;
  auto *lemma_cmd = app.add_subcommand("lemma-check", "Check the Dirichlet-multinomial rising factorial identity");
  lemma_cmd->add_option("--params", lemma.params, "Comma-separated half-integers, e.g. 1/2,1,3/2")->required();
  lemma_cmd->add_option("--r-max", lemma.r_max);
  lemma_cmd->add_option("--format", lemma.format)->check(CLI::IsMember({"table", "json"}));

  SampleArgs sample;
  auto *sample_cmd = app.add_subcommand("sample", "Write seeded samples as CSV");
  sample_cmd->add_option("source", sample.source, "arcsine | psc | rwa | spacings")
      ->required()
      ->check(CLI::IsMember({"arcsine", "psc", "rwa", "spacings"}));
  sample_cmd->add_option("--n", sample.n, "Summands (rwa) or parts (spacings)");
  sample_cmd->add_option("--a", sample.a, "Half-width");
  sample_cmd->add_option("--lambda", sample.lambda, "Power semicircle lambda (psc)");
  sample_cmd->add_option("--count", sample.count);
  sample_cmd->add_option("--seed", sample.seed);
  sample_cmd->add_option("--shards", sample.shards, "Independent streams for rwa batches");
  sample_cmd->add_option("--method", sample.method, "Spacings method: sorted | exponential");
  sample_cmd->add_option("--out", sample.out, "Output CSV path (default stdout)");
  sample_cmd->add_option("--envelope", sample.envelope, "JSON provenance envelope path (rwa only)");

  VerifyArgs verify;
  auto *verify_cmd = app.add_subcommand("verify", "KS and moment checks of S_n against the power semicircle law");
  verify_cmd->add_option("--n", verify.n);
  verify_cmd->add_option("--a", verify.a);
  verify_cmd->add_option("--count", verify.count);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--k-max", verify.k_max);
  verify_cmd->add_option("--alpha", verify.alpha);
  verify_cmd->add_option("--shards", verify.shards);
  verify_cmd->add_option("--lambda-override", verify.lambda_override, "Test only: wrong null lambda");
  verify_cmd->add_option("--out", verify.out, "JSON report path");

  PlotArgs plot;
  auto *plot_cmd = app.add_subcommand("plot-data", "Histogram vs density as CSV");
  plot_cmd->add_option("--n", plot.n);
  plot_cmd->add_option("--a", plot.a);
  plot_cmd->add_option("--bins", plot.bins, "Bin count (>= 10, default Rice rule)");
  plot_cmd->add_option("--count", plot.count);
  plot_cmd->add_option("--seed", plot.seed);
  plot_cmd->add_option("--shards", plot.shards);
  plot_cmd->add_option("--out", plot.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*moment_cmd) return cmd_moment(moment, out, err);
    if (*lemma_cmd) return cmd_lemma_check(lemma, out);
    if (*sample_cmd) return cmd_sample(sample, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*plot_cmd) return cmd_plot_data(plot, out);
  } catch (const ParameterError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError &e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

} // namespace rwa::cli
