// symcert: exact verification of two-term Newton-Maclaurin type inequalities.
//
// Exit status: 0 on success, 1 when a mathematical finding is reported
// (negative gap, counterexample, failed check), 2 on usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "symcert/certificate.hpp"
#include "symcert/errors.hpp"
#include "symcert/inequalities.hpp"
#include "symcert/json_io.hpp"
#include "symcert/reduction.hpp"
#include "symcert/report.hpp"
#include "symcert/search.hpp"

namespace {

using symcert::Rational;
using symcert::Tuple;
using symcert::json::Json;

constexpr int kOk = 0;
constexpr int kFinding = 1;
constexpr int kUsage = 2;

struct Outcome {
  Json doc;
  int code = kOk;
};

// Raw option values; numeric inputs are parsed exactly once a subcommand runs.
struct Args {
  std::string format = "json";
  std::string config;
  unsigned threads = 0;

  std::string x;
  std::string coeffs;
  std::string alpha;
  std::string theta;
  std::string ineq;
  std::string special;
  int n = 0;
  int k = -1;
  int m = 3;
  int n_min = 4;
  int n_max = symcert::ReportConfig{}.n_max;
  int sample_n_max = symcert::ReportConfig{}.sample_n_max;
  std::uint64_t seed = 1;
  std::uint64_t budget = 20000;
  std::uint64_t samples = 1000;
  std::uint64_t report_samples = symcert::ReportConfig{}.samples;
  bool naive = false;
  bool cascade = false;
  bool symbolic = false;

  std::string hint_x;
  std::string hint_coeffs;
  std::string family = "alternating-signs";
  int tuple_len = 0;
  bool include_negative = false;
  std::string output;
};

Rational alpha_of(const Args& a) { return a.alpha.empty() ? Rational(0) : symcert::parse_rational(a.alpha); }

void require(bool ok, const std::string& what) {
  if (!ok) throw CLI::ValidationError(what);
}

Json gap_doc(const std::string& ineq, const Tuple& x, const symcert::GapReport& r) {
  Json out;
  out["inequality"] = ineq;
  out["x"] = symcert::json::rationals(x.entries());
  out["report"] = symcert::json::gap_report(r);
  return out;
}

Outcome cmd_sigma(const Args& a) {
  const Tuple x = symcert::parse_tuple(a.x);
  Outcome o;
  o.doc["x"] = symcert::json::rationals(x.entries());
  o.doc["profile"] = symcert::json::sym_profile(x);
  if (a.naive) {
    const auto fast = symcert::sigma_all(x);
    const auto slow = symcert::sigma_naive(x);
    const bool agree = std::equal(fast.values().begin(), fast.values().end(),
                                  slow.values().begin(), slow.values().end());
    o.doc["naive_agrees"] = agree;
    if (!agree) o.code = kFinding;
  }
  return o;
}

Outcome cmd_verify(const Args& a) {
  Outcome o;
  if (a.ineq == "remark") {
    require(a.n >= 2, "--n is required for --ineq remark");
    const int k = a.k < 0 ? 0 : a.k;
    const auto w = symcert::remark_violation(a.n, k);
    o.doc = gap_doc("remark", w.x, w.report);
    o.doc["alpha"] = symcert::json::rational(w.alpha);
    o.doc["k"] = w.k;
    o.code = w.report.gap < 0 ? kFinding : kOk;
    return o;
  }

  require(!a.x.empty(), "--x is required for --ineq " + a.ineq);
  const Tuple x = symcert::parse_tuple(a.x);
  const int n = static_cast<int>(x.size());
  const Rational alpha = alpha_of(a);
  symcert::GapReport r;
  if (a.ineq == "newton") {
    require(a.k >= 0, "--k is required");
    r = symcert::newton_gap(x, a.k);
  } else if (a.ineq == "gen-nm") {
    require(a.k >= 0, "--k is required");
    r = symcert::gen_nm_gap(x, alpha, a.k);
  } else if (a.ineq == "combo") {
    require(!a.coeffs.empty(), "--coeffs is required for --ineq combo");
    r = symcert::linear_combo_gap(x, symcert::CoeffVector(symcert::parse_rational_list(a.coeffs)));
  } else if (a.ineq == "quant") {
    require(a.k >= 0, "--k is required");
    const Rational theta = a.theta.empty() ? symcert::theta_for(n, a.k) : symcert::parse_rational(a.theta);
    r = symcert::quantitative_gap(x, alpha, a.k, theta);
    o.doc["theta"] = symcert::json::rational(theta);
  } else if (a.ineq == "liu-ren") {
    require(a.k >= 0, "--k is required");
    r = symcert::liu_ren_gap(x, alpha, a.k);
  } else if (a.ineq == "special") {
    require(!a.special.empty(), "--case is required for --ineq special");
    const auto which = symcert::parse_special_case(a.special);
    const Rational gap = symcert::special_case_gap(x, alpha, which);
    o.doc["inequality"] = "special";
    o.doc["case"] = std::string(symcert::to_string(which));
    o.doc["x"] = symcert::json::rationals(x.entries());
    o.doc["alpha"] = symcert::json::rational(alpha);
    o.doc["gap"] = symcert::json::rational(gap);
    o.doc["relation"] = std::string(symcert::to_string(symcert::relation_of(gap)));
    o.code = gap < 0 ? kFinding : kOk;
    return o;
  } else {
    throw CLI::ValidationError("unknown --ineq '" + a.ineq + "'");
  }
  Json doc = gap_doc(a.ineq, x, r);
  if (!a.alpha.empty()) doc["alpha"] = symcert::json::rational(alpha);
  if (a.k >= 0) doc["k"] = a.k;
  if (o.doc.contains("theta")) doc["theta"] = o.doc["theta"];
  o.doc = std::move(doc);
  o.code = r.gap < 0 ? kFinding : kOk;
  return o;
}

Outcome cmd_chain(const Args& a) {
  const Tuple x = symcert::parse_tuple(a.x);
  Outcome o;
  o.doc["x"] = symcert::json::rationals(x.entries());
  symcert::ChainResult r;
  if (a.alpha.empty()) {
    o.doc["chain"] = "maclaurin";
    r = symcert::maclaurin_chain_check(x);
  } else {
    const Rational alpha = alpha_of(a);
    o.doc["chain"] = "generalized";
    o.doc["alpha"] = symcert::json::rational(alpha);
    r = symcert::gen_maclaurin_chain(x, alpha);
  }
  o.doc["result"] = symcert::json::chain_result(r);
  o.code = r.holds ? kOk : kFinding;
  return o;
}

Outcome cmd_certificate(const Args& a) {
  require(a.n > 0 && a.k >= 0, "--n and --k are required");
  const auto cc = symcert::cert_constants(a.n, a.k);
  Outcome o;
  o.doc["n"] = a.n;
  o.doc["k"] = a.k;
  o.doc["constants"] = symcert::json::cert_constants(cc);
  const auto res = symcert::coefficient_system_residuals(cc);
  o.doc["coefficient_residuals"] = symcert::json::rationals(res);
  const auto row = symcert::lemma_row(a.n, a.k);
  o.doc["lemmas"] = symcert::json::lemma_row(row);
  bool ok = row.ok() && res[0] == 0 && res[1] == 0 && res[2] == 0;
  if (a.symbolic) {
    const auto check = symcert::symbolic_decomposition_check(a.n, a.k);
    o.doc["symbolic"] = symcert::json::symbolic_check(check);
    ok = ok && check.ok();
  }
  o.doc["pass"] = ok;
  o.code = ok ? kOk : kFinding;
  return o;
}

Outcome cmd_lemmas(const Args& a) {
  require(a.n_max >= a.n_min, "--n-max must be >= --n-min");
  const auto rows = symcert::lemma_scan(a.n_min, a.n_max, a.threads);
  Outcome o;
  o.doc["n_min"] = a.n_min;
  o.doc["n_max"] = a.n_max;
  o.doc["pairs"] = rows.size();
  Json table = Json::array();
  bool all = true;
  for (const auto& row : rows) {
    table.push_back(symcert::json::lemma_row(row));
    all = all && row.ok();
  }
  o.doc["all_pass"] = all;
  o.doc["rows"] = std::move(table);
  o.code = all ? kOk : kFinding;
  return o;
}

Outcome cmd_reduce(const Args& a) {
  require(a.k >= 1, "--k is required");
  const Tuple x = symcert::parse_tuple(a.x);
  const Rational alpha = alpha_of(a);
  Outcome o;
  o.doc["x"] = symcert::json::rationals(x.entries());
  o.doc["k"] = a.k;
  o.doc["alpha"] = symcert::json::rational(alpha);
  const auto cubic = symcert::associated_cubic(x, a.k);
  o.doc["cubic"] = symcert::json::cubic(cubic);
  const bool nonzero = cubic.c0 != 0 || cubic.c1 != 0 || cubic.c2 != 0 || cubic.c3 != 0;
  o.doc["discriminant"] =
      nonzero ? symcert::json::rational(symcert::cubic_discriminant(cubic)) : Json(nullptr);
  const auto triple = symcert::reduce_to_three(x, a.k, alpha);
  o.doc["reduction"] = symcert::json::root_triple(triple);
  const Rational reduced = symcert::reduced_gap(triple, alpha);
  const Rational direct = symcert::gen_nm_gap(x, alpha, a.k).gap;
  o.doc["reduced_gap"] = symcert::json::rational(reduced);
  o.doc["round_trip"] = reduced == direct;
  if (a.cascade) o.doc["cascade"] = symcert::json::cascade(symcert::derivative_cascade(x));
  o.code = reduced == direct ? kOk : kFinding;
  return o;
}

Outcome cmd_search_conjecture(const Args& a) {
  symcert::Conjecture15Options opts;
  opts.threads = a.threads;
  if (!a.hint_x.empty() || !a.hint_coeffs.empty()) {
    require(!a.hint_x.empty() && !a.hint_coeffs.empty(),
            "--hint-x and --hint-coeffs must be given together");
    opts.hints.emplace_back(symcert::parse_rational_list(a.hint_coeffs),
                            symcert::parse_tuple(a.hint_x));
  }
  const auto r = symcert::find_counterexample_15(a.m, a.n, a.seed, a.budget, opts);
  Outcome o;
  o.doc = symcert::json::conjecture15(r, a.m, a.n, a.budget);
  o.doc["seed"] = a.seed;
  o.code = r.witness ? kFinding : kOk;
  return o;
}

Outcome cmd_search_theta(const Args& a) {
  require(a.n > 0 && a.k >= 0, "--n and --k are required");
  Outcome o;
  o.doc = symcert::json::theta_summary(symcert::empirical_theta(a.n, a.k, a.samples, a.seed, a.threads));
  o.doc["seed"] = a.seed;
  return o;
}

Outcome cmd_search_scan(const Args& a) {
  symcert::ScanGrid grid = symcert::ScanGrid::defaults();
  grid.tuple_len = a.tuple_len;
  grid.include_negative = a.include_negative;
  const auto r = symcert::structured_scan(symcert::parse_coeff_family(a.family), a.m, grid);
  Outcome o;
  o.doc = symcert::json::scan_report(r);
  for (const auto& row : r.rows)
    if (row.negative > 0) o.code = kFinding;
  return o;
}

Outcome cmd_theta(const Args& a) {
  require(a.n > 0 && a.k >= 0, "--n and --k are required");
  Outcome o;
  o.doc["n"] = a.n;
  o.doc["k"] = a.k;
  o.doc["theta"] = symcert::json::rational(symcert::theta_for(a.n, a.k));
  return o;
}

Outcome cmd_report(const Args& a) {
  symcert::ReportConfig cfg;
  cfg.n_max = a.n_max;
  cfg.seed = a.seed;
  cfg.samples = a.report_samples;
  cfg.sample_n_max = a.sample_n_max;
  cfg.threads = a.threads;
  Outcome o;
  o.doc = symcert::report_bundle(cfg);
  if (!a.output.empty()) {
    std::ofstream out(a.output);
    if (!out) throw std::runtime_error("cannot open " + a.output + " for writing");
    out << o.doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write to " + a.output + " failed");
  }
  return o;
}

// Flat "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError(path + ":" + std::to_string(lineno) + ": expected key = value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

// Fill options that were not given on the command line from the config
// file. Keys are long option names without dashes.
void apply_config(CLI::App& app, const std::map<std::string, std::string>& cfg) {
  std::set<std::string> used;
  auto fill = [&](CLI::App* level) {
    for (CLI::Option* opt : level->get_options()) {
      const std::string name = opt->get_single_name();
      const auto it = cfg.find(name);
      if (it == cfg.end() || name == "config") continue;
      used.insert(name);
      if (opt->count() > 0) continue;
      if (opt->get_type_size() == 0) {
        if (it->second != "true" && it->second != "false")
          throw CLI::ValidationError(name + ": expected true or false in config");
        if (it->second == "false") continue;
      }
      opt->add_result(it->second);
      opt->run_callback();
    }
  };
  CLI::App* level = &app;
  while (level != nullptr) {
    fill(level);
    const auto subs = level->get_subcommands();
    level = subs.empty() ? nullptr : subs.front();
  }
  for (const auto& [key, value] : cfg)
    if (!used.contains(key)) std::cerr << "symcert: config key '" << key << "' ignored\n";
}

void print_text(const Json& j, std::ostream& os, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      print_text(value, os, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << indent << key << ":\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        os << indent << "  [" << i << "]\n";
        print_text(value[i], os, indent + "    ");
      }
    } else if (value.is_array()) {
      os << indent << key << ": (";
      for (std::size_t i = 0; i < value.size(); ++i)
        os << (i ? ", " : "") << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
      os << ")\n";
    } else {
      os << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

void print_lemma_table(const Json& doc, std::ostream& os) {
  os << "   n    k  theta1                     L3.1  L3.2  f     pass\n";
  for (const auto& row : doc["rows"]) {
    auto mark = [](bool b) { return b ? "ok  " : "FAIL"; };
    char buf[160];
    std::snprintf(buf, sizeof buf, "%4d %4d  %-26s %s  %s  %s  %s\n", row["n"].get<int>(),
                  row["k"].get<int>(), row["theta1"].get<std::string>().c_str(),
                  mark(row["lemma31"]["pass"].get<bool>()), mark(row["lemma32"]["pass"].get<bool>()),
                  mark(row["f_pass"].get<bool>()), mark(row["pass"].get<bool>()));
    os << buf;
  }
  os << doc["pairs"].get<std::size_t>() << " pairs, "
     << (doc["all_pass"].get<bool>() ? "all pass" : "FAILURES") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of two-term Newton-Maclaurin type inequalities"};
  app.require_subcommand(1);
  Args a;
  a.threads = symcert::default_threads();

  app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--config", a.config, "Flat key = value file; flags take precedence");
  app.add_option("--threads", a.threads, "Worker threads (default: SYMCERT_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  // --x may come from the config file, so presence is checked after parsing
  auto add_x = [&](CLI::App* sub) {
    sub->add_option("--x", a.x, "Tuple as a JSON array, e.g. [\"4\",\"1/4\"]");
  };

  auto* sigma = app.add_subcommand("sigma", "Elementary symmetric functions and their means");
  add_x(sigma);
  sigma->add_flag("--naive", a.naive, "Cross-check against subset enumeration");

  auto* verify = app.add_subcommand("verify", "Evaluate one inequality exactly");
  verify->add_option("--ineq", a.ineq, "Inequality")
      ->check(CLI::IsMember({"newton", "gen-nm", "combo", "quant", "liu-ren", "special", "remark"}));
  add_x(verify);
  verify->add_option("--coeffs", a.coeffs, "Coefficient vector as a JSON array");
  verify->add_option("--alpha", a.alpha, "alpha (p/q or decimal)");
  verify->add_option("--theta", a.theta, "theta for --ineq quant (default: certified value)");
  verify->add_option("--k", a.k, "Index k");
  verify->add_option("--n", a.n, "Tuple length for --ineq remark");
  verify->add_option("--case", a.special, "K0, KN1 or N3K1 for --ineq special");

  auto* chain = app.add_subcommand("chain", "Maclaurin chain, or the generalized chain with --alpha");
  add_x(chain);
  chain->add_option("--alpha", a.alpha, "alpha >= 0");

  auto* certificate = app.add_subcommand("certificate", "Decomposition constants for (n, k)");
  certificate->add_option("--n", a.n, "n >= 4");
  certificate->add_option("--k", a.k, "1 <= k <= n-2");
  certificate->add_flag("--symbolic", a.symbolic, "Also match the decomposition symbolically");

  auto* lemmas = app.add_subcommand("lemmas", "Exact positivity scan over all (n, k)");
  lemmas->add_option("--n-min", a.n_min, "Smallest n")->check(CLI::Range(4, 100000));
  lemmas->add_option("--n-max", a.n_max, "Largest n")->check(CLI::Range(4, 100000));

  auto* reduce = app.add_subcommand("reduce", "Three-variable reduction through the associated cubic");
  add_x(reduce);
  reduce->add_option("--k", a.k, "1 <= k <= n-2");
  reduce->add_option("--alpha", a.alpha, "alpha for the reduced gap (default 0)");
  reduce->add_flag("--cascade", a.cascade, "Include the derivative cascade");

  auto* search = app.add_subcommand("search", "Randomized and structured searches");
  search->require_subcommand(1);
  auto* conj = search->add_subcommand("conjecture15", "Counterexamples to the general combination inequality");
  conj->add_option("--m", a.m, "Number of coefficients")->check(CLI::PositiveNumber);
  conj->add_option("--n", a.n, "Tuple length")->check(CLI::PositiveNumber);
  conj->add_option("--seed", a.seed, "Seed");
  conj->add_option("--budget", a.budget, "Random iterations")->check(CLI::PositiveNumber);
  conj->add_option("--hint-x", a.hint_x, "Tuple checked before sampling");
  conj->add_option("--hint-coeffs", a.hint_coeffs, "Coefficients checked before sampling");
  auto* st = search->add_subcommand("theta", "Observed minimum of the quantitative ratio");
  st->add_option("--n", a.n, "Tuple length");
  st->add_option("--k", a.k, "0 <= k <= n-1");
  st->add_option("--samples", a.samples, "Samples")->check(CLI::PositiveNumber);
  st->add_option("--seed", a.seed, "Seed");
  auto* scan = search->add_subcommand("scan", "Grid scan over a coefficient family");
  scan->add_option("--family", a.family, "two-adjacent, one-hot, alternating-signs or all-ones");
  scan->add_option("--m", a.m, "Number of coefficients")->check(CLI::PositiveNumber);
  scan->add_option("--tuple-len", a.tuple_len, "Tuple length (default m + 1)");
  scan->add_flag("--include-negative", a.include_negative, "Also use negated grid values");

  auto* theta = app.add_subcommand("theta", "Certified theta(n, k)");
  theta->add_option("--n", a.n, "Tuple length");
  theta->add_option("--k", a.k, "0 <= k <= n-1");

  auto* report = app.add_subcommand("report", "Reproducible JSON report bundle");
  report->add_option("--n-max", a.n_max, "Largest n")->check(CLI::Range(3, 100000));
  report->add_option("--seed", a.seed, "Seed");
  report->add_option("--samples", a.report_samples, "Random samples per (n, k)");
  report->add_option("--sample-n-max", a.sample_n_max, "Largest n for sampled sections");
  report->add_option("--output", a.output, "Also write the document to this file");

  try {
    app.parse(argc, argv);
    if (!a.config.empty()) apply_config(app, read_config(a.config));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  Outcome out;
  try {
    auto needs_x = [&] { require(!a.x.empty(), "--x is required"); };
    if (sigma->parsed()) {
      needs_x();
      out = cmd_sigma(a);
    } else if (verify->parsed()) {
      require(!a.ineq.empty(), "--ineq is required");
      out = cmd_verify(a);
    } else if (chain->parsed()) {
      needs_x();
      out = cmd_chain(a);
    } else if (certificate->parsed()) {
      out = cmd_certificate(a);
    } else if (lemmas->parsed()) {
      out = cmd_lemmas(a);
    } else if (reduce->parsed()) {
      needs_x();
      out = cmd_reduce(a);
    } else if (conj->parsed()) {
      require(a.n > 0, "--n is required");
      out = cmd_search_conjecture(a);
    } else if (st->parsed()) {
      out = cmd_search_theta(a);
    } else if (scan->parsed()) {
      out = cmd_search_scan(a);
    } else if (theta->parsed()) {
      out = cmd_theta(a);
    } else if (report->parsed()) {
      out = cmd_report(a);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "symcert: " << e.what() << '\n';
    return kUsage;
  } catch (const symcert::CertificateViolation& e) {
    std::cerr << "symcert: certificate violated: " << e.what() << '\n';
    return kFinding;
  } catch (const std::invalid_argument& e) {
    std::cerr << "symcert: invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "symcert: out of range: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "symcert: precondition failed: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "symcert: " << e.what() << '\n';
    return kUsage;
  }

  if (a.format == "json") {
    std::cout << out.doc.dump(2) << '\n';
  } else if (lemmas->parsed()) {
    print_lemma_table(out.doc, std::cout);
  } else {
    print_text(out.doc, std::cout);
  }
  return out.code;
}
