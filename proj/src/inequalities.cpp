#include "symcert/inequalities.hpp"

#include <string>

#include "symcert/errors.hpp"

namespace symcert {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::StrictlyPositive: return "StrictlyPositive";
    case Relation::Zero: return "Zero";
    case Relation::Negative: return "Negative";
  }
  return "?";
}

std::string_view to_string(EqualityCase e) {
  switch (e) {
    case EqualityCase::NotApplicable: return "NotApplicable";
    case EqualityCase::AllEqual: return "AllEqual";
    case EqualityCase::RatioMinusAlpha: return "RatioMinusAlpha";
    case EqualityCase::Strict: return "Strict";
  }
  return "?";
}

Relation relation_of(const Rational& gap) {
  const int s = sgn(gap);
  if (s > 0) return Relation::StrictlyPositive;
  if (s < 0) return Relation::Negative;
  return Relation::Zero;
}

GapReport GapReport::from(Rational lhs, Rational rhs, EqualityCase eq) {
  GapReport r;
  r.gap = lhs - rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.relation = relation_of(r.gap);
  r.equality_case = eq;
  return r;
}

CoeffVector::CoeffVector(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("coefficient vector must be nonempty");
}

CoeffVector CoeffVector::one_hot(std::size_t m, std::size_t position) {
  if (position >= m) throw RangeError("one_hot: position outside the vector");
  std::vector<Rational> c(m, Rational(0));
  c[position] = 1;
  return CoeffVector(std::move(c));
}

namespace {

int size_of(const Tuple& x) { return static_cast<int>(x.size()); }

// Sign-based classification shared by the Newton-type gaps: a positive gap is
// strict, a zero gap is attributed to the first matching condition.
EqualityCase classify(const Rational& gap, bool all_equal, bool ratio_condition) {
  if (gap > 0) return EqualityCase::Strict;
  if (gap < 0) return EqualityCase::NotApplicable;
  if (all_equal) return EqualityCase::AllEqual;
  if (ratio_condition) return EqualityCase::RatioMinusAlpha;
  return EqualityCase::NotApplicable;
}

bool cross_powers_hold(const Rational& lower_base, unsigned long lower_exp,
                       const Rational& upper_base, unsigned long upper_exp, Relation& rel) {
  const Rational diff = pow(lower_base, lower_exp) - pow(upper_base, upper_exp);
  rel = relation_of(diff);
  return diff >= 0;
}

}  // namespace

GapReport newton_gap(const Tuple& x, int k) {
  const int n = size_of(x);
  if (k < 1 || k > n - 1)
    throw RangeError("newton_gap: k must lie in [1, n-1], got k = " + std::to_string(k));
  const MeanProfile e = MeanProfile::of(x);
  Rational lhs = e[k] * e[k];
  Rational rhs = e[k - 1] * e[k + 1];
  GapReport r = GapReport::from(std::move(lhs), std::move(rhs));
  r.equality_case = classify(r.gap, x.all_equal(), false);
  return r;
}

ChainResult maclaurin_chain_check(const Tuple& x) {
  for (const auto& v : x)
    if (v < 0) throw PreconditionError("maclaurin_chain_check: entries must be nonnegative");
  const MeanProfile e = MeanProfile::of(x);
  const int n = size_of(x);
  ChainResult out;
  out.last_index = n;
  for (int k = 1; k <= n - 1; ++k) {
    Relation rel{};
    const auto uk = static_cast<unsigned long>(k);
    if (!cross_powers_hold(e[k], uk + 1, e[k + 1], uk, rel) && out.holds) {
      out.holds = false;
      out.first_failure = k;
    }
    out.steps.push_back(rel);
  }
  return out;
}

GapReport two_term_gap_unchecked(const MeanProfile& e, const Rational& alpha, int k) {
  const Rational p = alpha * e[k - 1] + e[k];
  const Rational q = alpha * e[k] + e[k + 1];
  const Rational r = alpha * e[k + 1] + e[k + 2];
  GapReport out = GapReport::from(q * q, p * r);
  return out;
}

GapReport gen_nm_gap(const Tuple& x, const Rational& alpha, int k) {
  const int n = size_of(x);
  if (n < 3) throw RangeError("gen_nm_gap: requires n >= 3");
  if (k < 1 || k > n - 2)
    throw RangeError("gen_nm_gap: k must lie in [1, n-2], got k = " + std::to_string(k));
  const MeanProfile e = MeanProfile::of(x);
  GapReport out = two_term_gap_unchecked(e, alpha, k);
  const Rational p = alpha * e[k - 1] + e[k];
  const Rational q = alpha * e[k] + e[k + 1];
  const Rational r = alpha * e[k + 1] + e[k + 2];
  // q/p = r/q = -alpha, cross-multiplied
  const bool ratio = q == -alpha * p && r == -alpha * q;
  out.equality_case = classify(out.gap, x.all_equal(), ratio);
  return out;
}

ChainResult gen_maclaurin_chain(const Tuple& x, const Rational& alpha) {
  const int n = size_of(x);
  if (n < 3) throw RangeError("gen_maclaurin_chain: requires n >= 3");
  if (alpha < 0) throw PreconditionError("gen_maclaurin_chain: alpha must be nonnegative");
  const MeanProfile e = MeanProfile::of(x);
  auto term = [&](int m) { return Rational(alpha * e[m] + e[m + 1]); };

  ChainResult out;
  int k = n - 2;
  for (int m = 0; m <= n - 2; ++m) {
    if (term(m) < 0) {
      out.precondition_break = m;
      k = m - 1;
      break;
    }
  }
  if (k < 0)
    throw PreconditionError("gen_maclaurin_chain: alpha + E_1 < 0, precondition fails at m = 0");
  out.last_index = k;
  for (int m = 1; m <= k; ++m) {
    Relation rel{};
    const auto um = static_cast<unsigned long>(m);
    if (!cross_powers_hold(term(m - 1), um + 1, term(m), um, rel) && out.holds) {
      out.holds = false;
      out.first_failure = m;
    }
    out.steps.push_back(rel);
  }
  return out;
}

GapReport linear_combo_gap(const Tuple& x, const CoeffVector& alpha) {
  const MeanProfile e = MeanProfile::of(x);
  Rational centre = 0, lower = 0, upper = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    centre += alpha[i] * e[k];
    lower += alpha[i] * e[k - 1];
    upper += alpha[i] * e[k + 1];
  }
  return GapReport::from(centre * centre, lower * upper);
}

GapReport quantitative_gap(const Tuple& x, const Rational& alpha, int k, const Rational& theta) {
  const int n = size_of(x);
  if (k < 0 || k > n - 1)
    throw RangeError("quantitative_gap: k must lie in [0, n-1], got k = " + std::to_string(k));
  if (theta <= 0 || theta >= 1)
    throw RangeError("quantitative_gap: theta must lie strictly between 0 and 1");
  const SymProfile s = sigma_all(x);
  const Rational centre = alpha * s[k] + s[k + 1];
  const Rational lower = alpha * s[k - 1] + s[k];
  const Rational upper = alpha * s[k + 1] + s[k + 2];
  return GapReport::from((1 - theta) * centre * centre, lower * upper);
}

GapReport liu_ren_gap(const Tuple& x, const Rational& alpha, int k) {
  const int n = size_of(x);
  if (k < 2 || k > n - 1)
    throw RangeError("liu_ren_gap: k must lie in [2, n-1], got k = " + std::to_string(k));
  if (alpha <= 0) throw PreconditionError("liu_ren_gap: alpha must be positive");
  if (!garding_membership(x, k))
    throw PreconditionError("liu_ren_gap: x is not in the Garding cone Gamma_" + std::to_string(k));
  const SymProfile s = sigma_all(x);
  const Rational centre = s[k] + alpha * s[k - 1];
  const Rational lower = s[k - 1] + alpha * s[k - 2];
  const Rational upper = s[k + 1] + alpha * s[k];
  return GapReport::from(centre * centre, lower * upper);
}

RemarkWitness remark_violation(int n, int k) {
  if (n < 2) throw RangeError("remark_violation: requires n >= 2");
  if (k != 0 && k != n - 1)
    throw RangeError("remark_violation: k must be an endpoint (0 or n-1), got k = " +
                     std::to_string(k));
  // Constant tuple c: the gap is alpha (alpha + c) at k = 0 and
  // c^{2n-1} (c + alpha) at k = n-1.
  const Rational c = 2;
  RemarkWitness w;
  w.alpha = k == 0 ? Rational(-1) : Rational(-3);
  w.k = k;
  w.x = Tuple(std::vector<Rational>(static_cast<std::size_t>(n), c));
  w.report = two_term_gap_unchecked(MeanProfile::of(w.x), w.alpha, k);
  w.report.equality_case = EqualityCase::NotApplicable;
  return w;
}

}  // namespace symcert
