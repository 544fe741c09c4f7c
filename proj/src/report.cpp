#include "symcert/report.hpp"

#include <algorithm>
#include <string>

#include "symcert/errors.hpp"

namespace symcert {

namespace {

json::Json gen_nm_sample_summary(int n, const ReportConfig& config) {
  std::uint64_t evaluated = 0, negative = 0, zero = 0;
  std::optional<Rational> min_gap;
  for (int k = 1; k <= n - 2; ++k) {
    for (std::uint64_t i = 0; i < config.samples; ++i) {
      auto rng = iteration_rng(config.seed ^ (static_cast<std::uint64_t>(n) << 40) ^
                                   (static_cast<std::uint64_t>(k) << 32),
                               i);
      std::vector<Rational> entries;
      for (int j = 0; j < n; ++j) entries.push_back(sample_entry(rng, false));
      const Rational alpha = sample_entry(rng, false);
      const GapReport r = gen_nm_gap(Tuple(std::move(entries)), alpha, k);
      ++evaluated;
      if (r.gap < 0) ++negative;
      if (r.gap == 0) ++zero;
      if (!min_gap || r.gap < *min_gap) min_gap = r.gap;
    }
  }
  json::Json out;
  out["n"] = n;
  out["evaluated"] = evaluated;
  out["negative"] = negative;
  out["zero"] = zero;
  out["min_gap"] = min_gap ? json::rational(*min_gap) : json::Json(nullptr);
  return out;
}

}  // namespace

json::Json report_bundle(const ReportConfig& config) {
  if (config.n_max < 3) throw RangeError("report_bundle: n_max must be at least 3");
  json::Json doc;
  doc["config"] = {{"n_max", config.n_max},
                   {"seed", config.seed},
                   {"samples", config.samples},
                   {"sample_n_max", config.sample_n_max}};

  json::Json thetas = json::Json::array();
  for (int n = 3; n <= config.n_max; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      const bool special = k == 0 || k == n - 1 || (n == 3 && k == 1);
      thetas.push_back({{"n", n},
                        {"k", k},
                        {"theta", json::rational(theta_for(n, k))},
                        {"source", special ? "special-case" : "theta1"}});
    }
  }
  doc["theta_table"] = thetas;

  json::Json certs = json::Json::array();
  for (int n = 4; n <= config.n_max; ++n)
    for (int k = 1; k <= n - 2; ++k) certs.push_back(json::cert_constants(cert_constants(n, k)));
  doc["certificates"] = certs;

  json::Json lemmas;
  if (config.n_max >= 4) {
    const auto rows = lemma_scan(4, config.n_max, config.threads);
    const auto failed = std::count_if(rows.begin(), rows.end(), [](const LemmaRow& r) { return !r.ok(); });
    lemmas = {{"pairs", rows.size()}, {"failed", failed}, {"all_passed", failed == 0}};
  } else {
    lemmas = {{"pairs", 0}, {"failed", 0}, {"all_passed", true}};
  }
  doc["lemma_scan"] = lemmas;

  const Tuple witness_tuple{Rational(4), Rational(4), Rational(1, 4), Rational(1, 4)};
  const std::vector<Rational> witness_coeffs{Rational(1), Rational(0), Rational(1)};
  json::Json combo = json::gap_report(linear_combo_gap(witness_tuple, CoeffVector(witness_coeffs)));
  combo["x"] = json::rationals(witness_tuple.entries());
  combo["coeffs"] = json::rationals(witness_coeffs);
  combo["E"] = json::rationals(e_all(witness_tuple));
  doc["counterexample"] = combo;

  json::Json samples;
  json::Json gen_nm = json::Json::array();
  json::Json theta = json::Json::array();
  const int top = std::min(config.n_max, config.sample_n_max);
  for (int n = 3; n <= top; ++n) {
    gen_nm.push_back(gen_nm_sample_summary(n, config));
    for (int k = 0; k <= n - 1; ++k) {
      const auto summary = empirical_theta(n, k, config.samples,
                                           config.seed + static_cast<std::uint64_t>(100 * n + k),
                                           config.threads);
      theta.push_back({{"n", n},
                       {"k", k},
                       {"theta", json::rational(summary.theta)},
                       {"min_ratio", json::rational(summary.min_ratio)},
                       {"degenerate", summary.degenerate},
                       {"bound_holds", summary.min_ratio >= summary.theta}});
    }
  }
  samples["gen_nm"] = gen_nm;
  samples["theta"] = theta;
  doc["samples"] = samples;
  return doc;
}

}  // namespace symcert
