// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "symcert/certificate.hpp"
#include "symcert/inequalities.hpp"
#include "symcert/reduction.hpp"
#include "symcert/report.hpp"
#include "symcert/search.hpp"
#include "symcert/symmetric.hpp"

using namespace symcert;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later failures only bump the count.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome outcome(std::string detail) const {
    if (failures_ == 0) return {true, std::move(detail)};
    return {false, std::to_string(failures_) + " failure(s), first: " + first_};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

std::string str(const Rational& q) { return to_string(q); }

std::string tuple_str(const Tuple& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + str(x.entries()[i]);
  return s + ")";
}

Tuple real_tuple(std::mt19937_64& rng, int n, bool positive_only) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(sample_entry(rng, positive_only));
  return Tuple(std::move(v));
}

// Small-denominator entries hit exact zeros and ties more often than the
// log-uniform sampler; mix both.
Tuple mixed_tuple(std::mt19937_64& rng, int n, bool positive_only) {
  if (rng() % 2 == 0) return real_tuple(rng, n, positive_only);
  std::uniform_int_distribution<long> num(positive_only ? 0 : -12, 12), den(1, 4);
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    v.push_back(q);
  }
  return Tuple(std::move(v));
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Outcome counterexample() {
  Checker c;
  const Tuple x{Rational(4), Rational(4), Rational(1, 4), Rational(1, 4)};
  const GapReport r = linear_combo_gap(x, CoeffVector({Rational(1), Rational(0), Rational(1)}));
  c.expect(r.gap == Rational(-825, 1024), "gap = " + str(r.gap));
  c.expect(r.relation == Relation::Negative, "relation");
  const auto e = e_all(x);
  c.expect(e == std::vector<Rational>{Rational(1), Rational(17, 8), Rational(107, 32),
                                      Rational(17, 8), Rational(1)},
           "E values");
  return c.outcome("gap " + str(r.gap) + ", E = (" + str(e[1]) + ", " + str(e[2]) + ", " +
                   str(e[3]) + ", " + str(e[4]) + ")");
}

Outcome decomposition() {
  Checker c;
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10000; ++i) {
    const int n = uniform(rng, 4, 12);
    const int k = uniform(rng, 1, n - 2);
    std::vector<Rational> z;
    for (int j = 0; j < 3; ++j) z.push_back(sample_entry(rng, false));
    const Rational alpha = sample_entry(rng, false);
    c.expect(decomposition_residual(z, alpha, n, k) == 0,
             "residual at n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  int pairs = 0;
  std::size_t monomials = 0;
  for (int n = 4; n <= 12; ++n)
    for (int k = 1; k <= n - 2; ++k) {
      const SymbolicCheck s = symbolic_decomposition_check(n, k);
      c.expect(s.ok(), "symbolic match at n=" + std::to_string(n) + " k=" + std::to_string(k));
      ++pairs;
      monomials += s.monomials_compared;
    }
  return c.outcome("10000 random residuals zero; symbolic match on " + std::to_string(pairs) +
                   " pairs, " + std::to_string(monomials) + " monomials");
}

Outcome lemma_scans() {
  Checker c;
  const auto rows = lemma_scan(4, 64, default_threads());
  std::size_t expected_pairs = 0;
  for (int n = 4; n <= 64; ++n) expected_pairs += static_cast<std::size_t>(n - 2);
  c.expect(rows.size() == expected_pairs, "pair count " + std::to_string(rows.size()));
  for (const auto& row : rows) {
    const std::string at = " at n=" + std::to_string(row.n) + " k=" + std::to_string(row.k);
    c.expect(row.lemma31.ok(), "lemma31_check" + at);
    c.expect(row.lemma32.ok(), "lemma32_check" + at);
    c.expect(row.f.ok(), "f positivity" + at);
    c.expect(row.theta1_in_unit_interval(), "theta1 in (0,1)" + at);
    c.expect(row.ok(), "row" + at);
  }
  for (int n = 4; n <= 64; ++n) {
    const Integer expected = 3 * (n - 3);
    const auto lo = f_values(n, 1);
    const auto hi = f_values(n, n - 2);
    for (int j = 1; j <= 3; ++j) {
      c.expect(lo[static_cast<std::size_t>(j)] == expected, "f" + std::to_string(j + 1) + "(1), n=" + std::to_string(n));
      c.expect(hi[static_cast<std::size_t>(j)] == expected, "f" + std::to_string(j + 1) + "(n-2), n=" + std::to_string(n));
    }
  }
  return c.outcome(std::to_string(rows.size()) + " pairs pass; endpoint values 3(n-3) exact");
}

Outcome two_term() {
  Checker c;
  std::mt19937_64 rng(4);
  Rational min_gap;
  bool first = true;
  for (int i = 0; i < 10000; ++i) {
    const int n = uniform(rng, 3, 10);
    const int k = uniform(rng, 1, n - 2);
    const Tuple x = mixed_tuple(rng, n, false);
    const Rational alpha = sample_entry(rng, false);
    const GapReport r = gen_nm_gap(x, alpha, k);
    c.expect(r.gap >= 0, "negative gap at x=" + tuple_str(x) + " alpha=" + str(alpha));
    if (first || r.gap < min_gap) min_gap = r.gap;
    first = false;
  }
  int constructions = 0;
  for (int n = 3; n <= 10; ++n)
    for (int k = 1; k <= n - 2; ++k)
      for (const Rational& alpha : {Rational(2), Rational(-3, 5), Rational(7, 3)}) {
        std::vector<Rational> v(static_cast<std::size_t>(n - 1), Rational(-alpha));
        v.push_back(Rational(11, 2));
        const GapReport r = gen_nm_gap(Tuple(std::move(v)), alpha, k);
        c.expect(r.gap == 0 && r.equality_case == EqualityCase::RatioMinusAlpha,
                 "n-1 entries -alpha, n=" + std::to_string(n));
        const GapReport e = gen_nm_gap(Tuple(std::vector<Rational>(static_cast<std::size_t>(n), Rational(5, 3))), alpha, k);
        c.expect(e.gap == 0 && e.equality_case == EqualityCase::AllEqual, "all equal, n=" + std::to_string(n));
        ++constructions;
      }
  return c.outcome("10000 samples nonnegative (min gap sign " + std::to_string(sgn(min_gap)) + "); " +
                   std::to_string(constructions) + " equality constructions exact");
}

Outcome quantitative() {
  Checker c;
  std::mt19937_64 rng(5);
  int endpoint0 = 0, endpoint_last = 0, n3k1 = 0, general = 0;
  for (int i = 0; i < 10000; ++i) {
    const int n = uniform(rng, 3, 10);
    int k;
    switch (i % 4) {
      case 0: k = 0; ++endpoint0; break;
      case 1: k = n - 1; ++endpoint_last; break;
      default: k = uniform(rng, 1, n - 2); break;
    }
    if (n == 3 && k == 1) ++n3k1;
    else if (k >= 1 && k <= n - 2) ++general;
    const Tuple x = mixed_tuple(rng, n, false);
    const Rational alpha = sample_entry(rng, false);
    const GapReport r = quantitative_gap(x, alpha, k, theta_for(n, k));
    c.expect(r.gap >= 0, "negative quantitative gap at n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  c.expect(n3k1 > 0 && general > 0, "coverage");
  int summaries = 0;
  for (int n = 3; n <= 8; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      try {
        const ThetaSummary s = empirical_theta(n, k, 300, 17 + static_cast<std::uint64_t>(n * 10 + k));
        c.expect(s.min_ratio >= s.theta, "empirical ratio below theta at n=" + std::to_string(n));
        ++summaries;
      } catch (const std::exception& e) {
        c.expect(false, std::string("empirical_theta: ") + e.what());
      }
    }
  std::ostringstream d;
  d << "10000 samples (k=0: " << endpoint0 << ", k=n-1: " << endpoint_last << ", (3,1): " << n3k1
    << ", general: " << general << "); " << summaries << " empirical_theta runs above bound";
  return c.outcome(d.str());
}

Outcome remark() {
  Checker c;
  const RemarkWitness w = remark_violation(3, 0);
  c.expect(w.x == Tuple{Rational(2), Rational(2), Rational(2)}, "x = " + tuple_str(w.x));
  c.expect(w.alpha == -1, "alpha = " + str(w.alpha));
  c.expect(w.report.gap == -1, "gap = " + str(w.report.gap));
  for (int n = 2; n <= 12; ++n)
    for (int k : {0, n - 1}) {
      const RemarkWitness r = remark_violation(n, k);
      c.expect(r.report.gap < 0, "gap not negative at n=" + std::to_string(n) + " k=" + std::to_string(k));
      c.expect(r.x.all_equal(), "witness not constant");
    }
  const RemarkWitness last = remark_violation(3, 2);
  return c.outcome("n=3,k=0: x=(2,2,2), alpha=-1, gap=" + str(w.report.gap) + "; n=3,k=2: alpha=" +
                   str(last.alpha) + ", gap=" + str(last.report.gap) + "; n=2..12 all negative");
}

Outcome oracle() {
  Checker c;
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 12; ++n)
    for (int i = 0; i < 1000; ++i) {
      const Tuple x = mixed_tuple(rng, n, false);
      const SymProfile fast = sigma_all(x);
      const SymProfile slow = sigma_naive(x);
      c.expect(std::equal(fast.values().begin(), fast.values().end(), slow.values().begin(),
                          slow.values().end()),
               "mismatch at x=" + tuple_str(x));
    }
  return c.outcome("12000 tuples, n = 1..12");
}

Outcome reduction() {
  Checker c;
  std::mt19937_64 rng(8);
  int case_a = 0, case_b = 0, degenerate = 0;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const int n = uniform(rng, 3, 10);
    const int k = uniform(rng, 1, n - 2);
    const Tuple x = mixed_tuple(rng, n, false);
    const Rational alpha = sample_entry(rng, false);
    const Cubic cubic = associated_cubic(x, k);
    if (cubic.c0 != 0 || cubic.c1 != 0 || cubic.c2 != 0 || cubic.c3 != 0)
      c.expect(cubic_discriminant(cubic) >= 0, "negative discriminant at x=" + tuple_str(x));
    const RootTriple r = reduce_to_three(x, k, alpha);
    c.expect(reduced_gap(r, alpha) == gen_nm_gap(x, alpha, k).gap, "round trip at x=" + tuple_str(x));
    for (double res : r.relative_residuals) {
      c.expect(res < 1e-12, "root residual " + std::to_string(res));
      worst = std::max(worst, res);
    }
    switch (r.branch) {
      case Branch::CaseA: ++case_a; break;
      case Branch::CaseB: ++case_b; break;
      case Branch::Degenerate: ++degenerate; break;
    }
    if (r.branch != Branch::Degenerate) {
      std::vector<Rational> z;
      for (long double v : r.roots) z.push_back(from_long_double(v));
      c.expect(lemma21_identity_residual(z, alpha).residual == 0, "three-square identity");
    }
    std::vector<Rational> z;
    for (int j = 0; j < 3; ++j) z.push_back(sample_entry(rng, false));
    c.expect(lemma21_identity_residual(z, alpha).residual == 0, "three-square identity, random z");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  return c.outcome("10000 tuples (CaseA " + std::to_string(case_a) + ", CaseB " +
                   std::to_string(case_b) + ", degenerate " + std::to_string(degenerate) +
                   "); worst root residual " + buf);
}

Outcome chains() {
  Checker c;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10000; ++i) {
    const int n = uniform(rng, 1, 10);
    const Tuple x = mixed_tuple(rng, n, true);
    const ChainResult classical = maclaurin_chain_check(x);
    c.expect(classical.holds, "classical chain fails at x=" + tuple_str(x));
    if (n < 3) continue;
    const Rational alpha = rng() % 5 == 0 ? Rational(0) : sample_entry(rng, true);
    const ChainResult general = gen_maclaurin_chain(x, alpha);
    c.expect(general.holds && !general.precondition_break, "generalized chain fails at x=" + tuple_str(x));
  }
  return c.outcome("10000 nonnegative tuples (n = 1..10), both chains hold");
}

Outcome determinism() {
  Checker c;
  ReportConfig cfg;
  const std::string a = report_bundle(cfg).dump();
  const std::string b = report_bundle(cfg).dump();
  cfg.threads = 4;
  const std::string t = report_bundle(cfg).dump();
  c.expect(a == b, "report_bundle differs between runs");
  c.expect(a == t, "report_bundle differs across thread counts");

  Conjecture15Options one, four;
  four.threads = 4;
  const auto s1 = find_counterexample_15(3, 4, 31, 20000, one);
  const auto s2 = find_counterexample_15(3, 4, 31, 20000, one);
  const auto s4 = find_counterexample_15(3, 4, 31, 20000, four);
  c.expect(s1.witness.has_value(), "search found nothing");
  const std::string j1 = json::conjecture15(s1, 3, 4, 20000).dump();
  c.expect(j1 == json::conjecture15(s2, 3, 4, 20000).dump(), "search differs between runs");
  c.expect(j1 == json::conjecture15(s4, 3, 4, 20000).dump(), "search differs across thread counts");

  const std::string th1 = json::theta_summary(empirical_theta(6, 2, 500, 3, 1)).dump();
  const std::string th4 = json::theta_summary(empirical_theta(6, 2, 500, 3, 4)).dump();
  c.expect(th1 == th4, "empirical_theta differs across thread counts");
  return c.outcome("report (" + std::to_string(a.size()) + " bytes), conjecture search and theta search identical");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no runtime requirement
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "counterexample reproduction", 1.0, counterexample},
      {2, "decomposition identity", 30.0, decomposition},
      {3, "lemma scans", 10.0, lemma_scans},
      {4, "two-term inequality", 0.0, two_term},
      {5, "quantitative inequality", 0.0, quantitative},
      {6, "endpoint violations", 0.0, remark},
      {7, "oracle equivalence", 0.0, oracle},
      {8, "reduction", 0.0, reduction},
      {9, "chains", 0.0, chains},
      {10, "determinism", 0.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail = "runtime " + std::to_string(secs) + " s over limit; " + o.detail;
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2d %-28s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
