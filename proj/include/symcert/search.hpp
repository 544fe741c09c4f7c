#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "symcert/inequalities.hpp"
#include "symcert/rational.hpp"
#include "symcert/symmetric.hpp"

namespace symcert {

enum class WitnessContext { Conjecture15, ThetaRatio };
std::string_view to_string(WitnessContext c);

/// An exact input together with its exactly recomputed gap.
///  - Conjecture15: gap = linear_combo_gap(tuple, coeffs).gap < 0.
///  - ThetaRatio: gap = quantitative_gap(tuple, alpha, k, theta_for(n,k)).gap.
struct Witness {
  WitnessContext context = WitnessContext::Conjecture15;
  Tuple tuple;
  std::vector<Rational> coeffs;
  Rational alpha;
  int k = 0;
  Rational gap;
  std::uint64_t seed = 0;
  std::uint64_t iteration = 0;
  bool from_hint = false;
};

/// Recompute the gap from the stored rational inputs. For Conjecture15
/// witnesses also requires it to be negative.
bool reverify(const Witness& w);

/// Deterministic per-iteration random stream, independent of thread count.
std::mt19937_64 iteration_rng(std::uint64_t seed, std::uint64_t iteration);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(std::mt19937_64& rng);

/// +-exp(U[-range, range]) (sign random unless positive_only), rationalized
/// with denominator bound max_den.
Rational sample_entry(std::mt19937_64& rng, bool positive_only, double range = 3.0,
                      long max_den = 1'000'000);

/// Worker count: SYMCERT_THREADS if set, else hardware concurrency.
unsigned default_threads();

struct Conjecture15Options {
  unsigned threads = 1;
  /// Candidates checked verbatim, before any random sampling.
  std::vector<std::pair<std::vector<Rational>, Tuple>> hints;
  /// Coordinate-perturbation steps applied to promising float candidates.
  int refine_steps = 60;
  long max_den = 1'000'000;
};

struct Conjecture15Result {
  std::optional<Witness> witness;
  std::uint64_t iterations = 0;        ///< random iterations examined
  std::uint64_t float_candidates = 0;  ///< float evidence of a negative gap
  std::uint64_t exact_rejections = 0;  ///< float candidates that failed exactly
};

/// Random search for a negative linear_combo_gap with m coefficients and
/// tuples of length n. Returns the confirmed witness with the smallest
/// iteration index (hints first).
Conjecture15Result find_counterexample_15(int m, int n, std::uint64_t seed, std::uint64_t budget,
                                          const Conjecture15Options& opts = {});

struct ThetaSummary {
  int n = 0;
  int k = 0;
  Rational theta;  ///< theta_for(n, k)
  Rational min_ratio;
  Witness argmin;
  std::uint64_t samples = 0;
  std::uint64_t degenerate = 0;  ///< alpha s_k + s_{k+1} = 0; ratio undefined
};

/// min over samples of 1 - [a s_{k-1} + s_k][a s_{k+1} + s_{k+2}] / (a s_k + s_{k+1})^2.
/// Throws CertificateViolation if any ratio falls below theta_for(n, k) and
/// PreconditionError if every sample is degenerate.
ThetaSummary empirical_theta(int n, int k, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads = 1);

/// Exact ratio for one (x, alpha, k); nullopt when the centre term vanishes.
std::optional<Rational> theta_ratio(const Tuple& x, const Rational& alpha, int k);

enum class CoeffFamily { TwoAdjacent, OneHot, AlternatingSigns, AllOnes };
std::string_view to_string(CoeffFamily f);
CoeffFamily parse_coeff_family(std::string_view text);

struct ScanGrid {
  /// Values u, v for two-valued tuples (u repeated p times, v repeated N-p).
  std::vector<Rational> values;
  /// Tuple length N; 0 means m + 1.
  int tuple_len = 0;
  bool include_negative = false;
  /// Second coefficient of the two-adjacent family (1, beta).
  std::vector<Rational> betas;

  static ScanGrid defaults();
};

struct ScanRow {
  std::vector<Rational> coeffs;
  std::uint64_t evaluated = 0;
  std::uint64_t negative = 0;
  std::uint64_t zero = 0;
  Rational min_gap;
  Tuple argmin;
};

struct ScanReport {
  CoeffFamily family = CoeffFamily::OneHot;
  int m = 0;
  int tuple_len = 0;
  std::vector<ScanRow> rows;
};

ScanReport structured_scan(CoeffFamily family, int m, const ScanGrid& grid);

}  // namespace symcert
