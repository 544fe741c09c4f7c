#include "symcert/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

#include "symcert/certificate.hpp"
#include "symcert/errors.hpp"

namespace symcert {

std::string_view to_string(WitnessContext c) {
  return c == WitnessContext::Conjecture15 ? "Conjecture15" : "ThetaRatio";
}

bool reverify(const Witness& w) {
  switch (w.context) {
    case WitnessContext::Conjecture15: {
      const GapReport r = linear_combo_gap(w.tuple, CoeffVector(w.coeffs));
      return r.gap == w.gap && r.gap < 0;
    }
    case WitnessContext::ThetaRatio: {
      const int n = static_cast<int>(w.tuple.size());
      const GapReport r = quantitative_gap(w.tuple, w.alpha, w.k, theta_for(n, w.k));
      return r.gap == w.gap && r.gap >= 0;
    }
  }
  return false;
}

std::mt19937_64 iteration_rng(std::uint64_t seed, std::uint64_t iteration) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(iteration),
                    static_cast<std::uint32_t>(iteration >> 32)};
  return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& rng) { return std::ldexp(static_cast<double>(rng() >> 11), -53); }

Rational sample_entry(std::mt19937_64& rng, bool positive_only, double range, long max_den) {
  const double magnitude = std::exp(range * (2.0 * uniform01(rng) - 1.0));
  const bool negative = !positive_only && uniform01(rng) < 0.5;
  return rationalize(negative ? -magnitude : magnitude, Integer(max_den));
}

unsigned default_threads() {
  if (const char* env = std::getenv("SYMCERT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs body(worker, i) for i = worker, worker + threads, ... < count.
template <typename Body>
void run_strided(unsigned threads, std::uint64_t count, Body body) {
  threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, count)));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(0u, i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::uint64_t i = w; i < count; i += threads) body(w, i);
    });
}

std::vector<double> float_means(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> s(n + 1, 0.0);
  s[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j >= 1; --j) s[j] += x[i] * s[j - 1];
  double binom = 1.0;
  for (std::size_t j = 1; j <= n; ++j) {
    binom = binom * static_cast<double>(n - j + 1) / static_cast<double>(j);
    s[j] /= binom;
  }
  return s;
}

// Scale-free float proxy for the sign of linear_combo_gap.
double combo_objective(const std::vector<double>& x, const std::vector<double>& coeffs) {
  const auto e = float_means(x);
  auto mean = [&](long j) { return j < 0 || j >= static_cast<long>(e.size()) ? 0.0 : e[static_cast<std::size_t>(j)]; };
  double centre = 0, lower = 0, upper = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const long k = static_cast<long>(i) + 1;
    centre += coeffs[i] * mean(k);
    lower += coeffs[i] * mean(k - 1);
    upper += coeffs[i] * mean(k + 1);
  }
  const double gap = centre * centre - lower * upper;
  const double norm = centre * centre + std::abs(lower * upper);
  if (!(norm > 0) || !std::isfinite(norm)) return 1.0;
  return gap / norm;
}

struct Candidate {
  std::vector<Rational> coeffs;
  std::vector<double> coeffs_f;
  std::vector<double> x;
};

Candidate sample_candidate(std::mt19937_64& rng, int m, int n) {
  Candidate c;
  c.coeffs.assign(static_cast<std::size_t>(m), Rational(0));
  if (uniform01(rng) < 0.75) {
    // sparse sign pattern in {-1, 0, 1}^m, not all zero
    bool any = false;
    while (!any) {
      for (auto& v : c.coeffs) {
        const auto pick = static_cast<int>(rng() % 3);
        v = pick - 1;
        any = any || pick != 1;
      }
    }
  } else {
    for (auto& v : c.coeffs)
      v = uniform01(rng) < 1.0 / 3.0 ? Rational(0) : sample_entry(rng, false, 1.0);
    if (std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& v) { return v == 0; }))
      c.coeffs[0] = 1;
  }
  for (const auto& v : c.coeffs) c.coeffs_f.push_back(v.get_d());
  const bool positive = uniform01(rng) < 0.5;
  for (int i = 0; i < n; ++i) {
    const double mag = std::exp(3.0 * (2.0 * uniform01(rng) - 1.0));
    c.x.push_back(!positive && uniform01(rng) < 0.5 ? -mag : mag);
  }
  return c;
}

void refine(std::mt19937_64& rng, Candidate& c, int steps) {
  double best = combo_objective(c.x, c.coeffs_f);
  const std::size_t n = c.x.size();
  for (int s = 0; s < steps; ++s) {
    const std::size_t j = static_cast<std::size_t>(s) % n;
    const double width = 0.5 * (1.0 - static_cast<double>(s) / steps) + 0.01;
    const double old = c.x[j];
    c.x[j] = old * std::exp(width * (2.0 * uniform01(rng) - 1.0));
    const double value = combo_objective(c.x, c.coeffs_f);
    if (value < best) {
      best = value;
    } else {
      c.x[j] = old;
    }
  }
}

}  // namespace

Conjecture15Result find_counterexample_15(int m, int n, std::uint64_t seed, std::uint64_t budget,
                                          const Conjecture15Options& opts) {
  if (m < 1 || n < 1) throw RangeError("find_counterexample_15: m and n must be positive");
  if (budget < 1) throw RangeError("find_counterexample_15: budget must be at least 1");
  Conjecture15Result result;

  for (std::size_t h = 0; h < opts.hints.size(); ++h) {
    const auto& [coeffs, tuple] = opts.hints[h];
    const GapReport r = linear_combo_gap(tuple, CoeffVector(coeffs));
    if (r.gap < 0) {
      Witness w;
      w.context = WitnessContext::Conjecture15;
      w.tuple = tuple;
      w.coeffs = coeffs;
      w.gap = r.gap;
      w.seed = seed;
      w.iteration = h;
      w.from_hint = true;
      result.witness = std::move(w);
      return result;
    }
  }

  std::atomic<std::uint64_t> best{budget};
  struct Found {
    std::uint64_t iteration;
    bool candidate;
    bool confirmed;
    std::optional<Witness> witness;
  };
  std::mutex mu;
  std::vector<Found> events;
  const Integer max_den(opts.max_den);

  run_strided(opts.threads, budget, [&](unsigned, std::uint64_t i) {
    if (i > best.load(std::memory_order_relaxed)) return;
    auto rng = iteration_rng(seed, i);
    Candidate c = sample_candidate(rng, m, n);
    if (combo_objective(c.x, c.coeffs_f) >= 0.05) return;
    refine(rng, c, opts.refine_steps);
    if (combo_objective(c.x, c.coeffs_f) >= 0) return;
    std::vector<Rational> exact;
    for (double v : c.x) exact.push_back(rationalize(v, max_den));
    Tuple tuple(std::move(exact));
    const GapReport r = linear_combo_gap(tuple, CoeffVector(c.coeffs));
    Found f{i, true, r.gap < 0, std::nullopt};
    if (f.confirmed) {
      Witness w;
      w.context = WitnessContext::Conjecture15;
      w.tuple = std::move(tuple);
      w.coeffs = c.coeffs;
      w.gap = r.gap;
      w.seed = seed;
      w.iteration = i;
      f.witness = std::move(w);
      std::uint64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
    std::lock_guard lock(mu);
    events.push_back(std::move(f));
  });

  const std::uint64_t stop = best.load();
  result.iterations = stop < budget ? stop + 1 : budget;
  for (auto& f : events) {
    if (f.iteration > stop) continue;
    ++result.float_candidates;
    if (!f.confirmed) ++result.exact_rejections;
    if (f.iteration == stop && f.witness) result.witness = std::move(f.witness);
  }
  return result;
}

std::optional<Rational> theta_ratio(const Tuple& x, const Rational& alpha, int k) {
  const SymProfile s = sigma_all(x);
  const Rational centre = alpha * s[k] + s[k + 1];
  if (centre == 0) return std::nullopt;
  const Rational lower = alpha * s[k - 1] + s[k];
  const Rational upper = alpha * s[k + 1] + s[k + 2];
  return Rational(1 - lower * upper / (centre * centre));
}

ThetaSummary empirical_theta(int n, int k, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads) {
  if (samples < 1) throw RangeError("empirical_theta: samples must be at least 1");
  const Rational theta = theta_for(n, k);

  struct Partial {
    std::optional<Rational> min_ratio;
    Witness argmin;
    std::uint64_t degenerate = 0;
  };
  std::vector<Partial> partials(std::max(1u, threads));
  std::mutex mu;
  std::optional<std::string> violation;

  run_strided(threads, samples, [&](unsigned worker, std::uint64_t i) {
    auto rng = iteration_rng(seed, i);
    Rational alpha = uniform01(rng) < 0.1 ? Rational(0) : sample_entry(rng, false);
    std::vector<Rational> entries;
    for (int j = 0; j < n; ++j) entries.push_back(sample_entry(rng, false));
    const double mode = uniform01(rng);
    if (mode < 0.25) {
      // near the equality configuration (-a, ..., -a, c)
      for (int j = 0; j + 1 < n; ++j) {
        Rational nudge = mode < 0.125 ? Rational(0) : rationalize(1e-3 * (2.0 * uniform01(rng) - 1.0), Integer(1'000'000));
        entries[static_cast<std::size_t>(j)] = -alpha * (1 + nudge);
      }
    }
    Tuple x(std::move(entries));
    Partial& p = partials[worker];
    const auto ratio = theta_ratio(x, alpha, k);
    if (!ratio) {
      ++p.degenerate;
      return;
    }
    if (*ratio < theta) {
      std::lock_guard lock(mu);
      violation = "empirical_theta: ratio " + to_string(*ratio) + " below certified theta " +
                  to_string(theta) + " at sample " + std::to_string(i);
      return;
    }
    // ties resolve to the smallest sample index
    if (!p.min_ratio || *ratio < *p.min_ratio ||
        (*ratio == *p.min_ratio && i < p.argmin.iteration)) {
      p.min_ratio = *ratio;
      p.argmin.context = WitnessContext::ThetaRatio;
      p.argmin.tuple = x;
      p.argmin.alpha = alpha;
      p.argmin.k = k;
      p.argmin.seed = seed;
      p.argmin.iteration = i;
    }
  });
  if (violation) throw CertificateViolation(*violation);

  ThetaSummary out;
  out.n = n;
  out.k = k;
  out.theta = theta;
  out.samples = samples;
  std::optional<Rational> best;
  for (auto& p : partials) {
    out.degenerate += p.degenerate;
    if (!p.min_ratio) continue;
    if (!best || *p.min_ratio < *best ||
        (*p.min_ratio == *best && p.argmin.iteration < out.argmin.iteration)) {
      best = p.min_ratio;
      out.argmin = p.argmin;
    }
  }
  if (!best) throw PreconditionError("empirical_theta: every sample was degenerate");
  out.min_ratio = *best;
  out.argmin.gap = quantitative_gap(out.argmin.tuple, out.argmin.alpha, k, theta).gap;
  return out;
}

std::string_view to_string(CoeffFamily f) {
  switch (f) {
    case CoeffFamily::TwoAdjacent: return "two-adjacent";
    case CoeffFamily::OneHot: return "one-hot";
    case CoeffFamily::AlternatingSigns: return "alternating-signs";
    case CoeffFamily::AllOnes: return "all-ones";
  }
  return "?";
}

CoeffFamily parse_coeff_family(std::string_view text) {
  for (auto f : {CoeffFamily::TwoAdjacent, CoeffFamily::OneHot, CoeffFamily::AlternatingSigns,
                 CoeffFamily::AllOnes})
    if (text == to_string(f)) return f;
  throw std::invalid_argument("unknown coefficient family '" + std::string(text) + "'");
}

ScanGrid ScanGrid::defaults() {
  ScanGrid g;
  g.values = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(4)};
  g.betas = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  return g;
}

namespace {

std::vector<std::vector<Rational>> family_members(CoeffFamily family, int m, const ScanGrid& grid) {
  const auto um = static_cast<std::size_t>(m);
  std::vector<std::vector<Rational>> out;
  switch (family) {
    case CoeffFamily::OneHot:
      for (std::size_t i = 0; i < um; ++i) {
        const CoeffVector hot = CoeffVector::one_hot(um, i);
        out.emplace_back(hot.values().begin(), hot.values().end());
      }
      break;
    case CoeffFamily::AllOnes:
      out.emplace_back(um, Rational(1));
      break;
    case CoeffFamily::TwoAdjacent:
      for (std::size_t i = 0; i + 1 < um; ++i)
        for (const auto& beta : grid.betas) {
          std::vector<Rational> c(um, Rational(0));
          c[i] = 1;
          c[i + 1] = beta;
          out.push_back(std::move(c));
        }
      break;
    case CoeffFamily::AlternatingSigns: {
      const std::size_t slots = (um + 1) / 2;
      for (std::size_t mask = 0; mask < (std::size_t{1} << slots); ++mask) {
        std::vector<Rational> c(um, Rational(0));
        for (std::size_t s = 0; s < slots; ++s) c[2 * s] = (mask >> s) & 1 ? -1 : 1;
        out.push_back(std::move(c));
      }
      break;
    }
  }
  return out;
}

}  // namespace

ScanReport structured_scan(CoeffFamily family, int m, const ScanGrid& grid) {
  if (m < 1) throw RangeError("structured_scan: m must be positive");
  ScanReport report;
  report.family = family;
  report.m = m;
  report.tuple_len = grid.tuple_len > 0 ? grid.tuple_len : m + 1;
  const int len = report.tuple_len;

  std::vector<Rational> values = grid.values;
  if (grid.include_negative)
    for (const auto& v : grid.values) values.emplace_back(-v);

  for (auto& coeffs : family_members(family, m, grid)) {
    ScanRow row;
    row.coeffs = coeffs;
    const CoeffVector cv(coeffs);
    for (int p = 1; p < std::max(2, len); ++p) {
      for (const auto& u : values) {
        for (const auto& v : values) {
          std::vector<Rational> entries(static_cast<std::size_t>(len), v);
          for (int i = 0; i < std::min(p, len); ++i) entries[static_cast<std::size_t>(i)] = u;
          Tuple x(std::move(entries));
          const GapReport r = linear_combo_gap(x, cv);
          ++row.evaluated;
          if (r.gap < 0) ++row.negative;
          if (r.gap == 0) ++row.zero;
          if (row.evaluated == 1 || r.gap < row.min_gap) {
            row.min_gap = r.gap;
            row.argmin = std::move(x);
          }
        }
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace symcert
