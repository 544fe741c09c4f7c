#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "symcert/rational.hpp"
#include "symcert/symmetric.hpp"

namespace symcert {

enum class Relation { StrictlyPositive, Zero, Negative };

/// Which equality condition (if any) explains a zero gap.
enum class EqualityCase { NotApplicable, AllEqual, RatioMinusAlpha, Strict };

std::string_view to_string(Relation r);
std::string_view to_string(EqualityCase e);

Relation relation_of(const Rational& gap);

/// One evaluated inequality instance: lhs - rhs = gap, exactly.
struct GapReport {
  Rational lhs;
  Rational rhs;
  Rational gap;
  Relation relation = Relation::Zero;
  EqualityCase equality_case = EqualityCase::NotApplicable;

  static GapReport from(Rational lhs, Rational rhs,
                        EqualityCase eq = EqualityCase::NotApplicable);
};

/// Coefficients alpha_1..alpha_m of a general linear combination of means.
class CoeffVector {
 public:
  explicit CoeffVector(std::vector<Rational> coeffs);
  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Rational> values() const& { return coeffs_; }
  std::span<const Rational> values() const&& = delete;

  static CoeffVector one_hot(std::size_t m, std::size_t position);

 private:
  std::vector<Rational> coeffs_;
};

/// E_k^2 - E_{k-1} E_{k+1}, 1 <= k <= n-1.
GapReport newton_gap(const Tuple& x, int k);

/// Outcome of a fractional-power chain, compared through integer cross powers.
struct ChainResult {
  bool holds = true;
  /// Index of the last term of the chain that was checked.
  int last_index = 0;
  /// Relation of each step (left minus right after raising to cross powers).
  std::vector<Relation> steps;
  std::optional<int> first_failure;
  /// Smallest m whose alpha E_m + E_{m+1} >= 0 precondition failed; the chain
  /// is truncated just before it.
  std::optional<int> precondition_break;
};

/// E_1 >= E_2^{1/2} >= ... >= E_n^{1/n} for a nonnegative tuple, as
/// E_k^{k+1} >= E_{k+1}^k.
ChainResult maclaurin_chain_check(const Tuple& x);

/// [alpha E_k + E_{k+1}]^2 - [alpha E_{k-1} + E_k][alpha E_{k+1} + E_{k+2}],
/// n >= 3 and 1 <= k <= n-2, with equality classification.
GapReport gen_nm_gap(const Tuple& x, const Rational& alpha, int k);

/// G_m = alpha E_m + E_{m+1}; checks G_{m-1}^{m+1} >= G_m^m for m = 1..k where
/// k <= n-2 is the largest index with G_0..G_k >= 0. Requires alpha >= 0.
ChainResult gen_maclaurin_chain(const Tuple& x, const Rational& alpha);

/// (sum a_k E_k)^2 - (sum a_k E_{k-1})(sum a_k E_{k+1}) with E_j = 0 beyond
/// the tuple length. No sign is claimed.
GapReport linear_combo_gap(const Tuple& x, const CoeffVector& alpha);

/// (1-theta)[a s_k + s_{k+1}]^2 - [a s_{k-1} + s_k][a s_{k+1} + s_{k+2}] over
/// the unnormalized sigma_j; 0 <= k <= n-1, 0 < theta < 1.
GapReport quantitative_gap(const Tuple& x, const Rational& alpha, int k, const Rational& theta);

/// [s_k + a s_{k-1}]^2 - [s_{k-1} + a s_{k-2}][s_{k+1} + a s_k] for alpha > 0,
/// x in the Garding cone Gamma_k, 2 <= k <= n-1. Throws PreconditionError
/// when alpha or x fall outside that region.
GapReport liu_ren_gap(const Tuple& x, const Rational& alpha, int k);

/// A constant tuple and alpha showing that the two-term inequality fails at
/// the endpoints k = 0 and k = n-1.
struct RemarkWitness {
  Tuple x;
  Rational alpha;
  int k = 0;
  GapReport report;
};

RemarkWitness remark_violation(int n, int k);

/// The two-term gap without range checks on k; used for the endpoint cases.
GapReport two_term_gap_unchecked(const MeanProfile& e, const Rational& alpha, int k);

}  // namespace symcert
