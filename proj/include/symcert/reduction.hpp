#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcert/rational.hpp"
#include "symcert/symmetric.hpp"
#include "symcert/upoly.hpp"

namespace symcert {

/// c0 t^3 + c1 t^2 + c2 t + c3.
struct Cubic {
  Rational c0, c1, c2, c3;
  UPoly as_poly() const { return UPoly({c3, c2, c1, c0}); }
  friend bool operator==(const Cubic&, const Cubic&) = default;
};

/// E_{k-1} t^3 - 3 E_k t^2 + 3 E_{k+1} t - E_{k+2}; n >= 3, 1 <= k <= n-2.
Cubic associated_cubic(const Tuple& x, int k);

/// Discriminant of the cubic, or of the quadratic/linear polynomial left when
/// leading coefficients vanish (a vanished leading coefficient is a real
/// root at infinity of the binary form). Nonnegative iff all roots are real.
/// Throws on the zero polynomial.
Rational cubic_discriminant(const Cubic& c);

/// Homogeneous binary form sum_j coeffs[j] t^{d-j} s^j.
struct BinaryForm {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const;
  BinaryForm d_dt() const;
  BinaryForm d_ds() const;
  /// p(t) = F(t, 1).
  UPoly dehomogenize() const;
  /// Multiplicity of the root at infinity (s = 0): leading vanishing t-powers.
  int multiplicity_at_infinity() const;
};

/// F(t,s) = sum_j (-1)^j C(n,j) E_j t^{n-j} s^j, the homogenized Pi (t - x_i).
BinaryForm homogenized_polynomial(const Tuple& x);

struct CascadeEntry {
  int t_derivs = 0;
  int s_derivs = 0;
  BinaryForm form;
  bool identically_zero = false;
  /// Projective real roots with multiplicity, including a root at infinity.
  int real_roots = 0;
  bool real_rooted = false;
  /// Every multiple root of this form is a root of its parent with
  /// multiplicity one higher.
  bool multiplicity_consistent = true;
};

/// Level L holds the L+1 mixed partials d^L F / dt^{L-j} ds^j, j = 0..L,
/// from L = 0 (F itself) to L = n-3 (the cubics; entry j there is the cubic
/// for k = j+1). Every entry is certified with exact Sturm counts.
std::vector<std::vector<CascadeEntry>> derivative_cascade(const Tuple& x);

enum class Branch { CaseA, CaseB, Degenerate };
std::string_view to_string(Branch b);

struct RootTriple {
  Branch branch = Branch::CaseA;
  /// CaseA: roots z of t^3 - 3m1 t^2 + 3m2 t - m3 with m = (E_k, E_{k+1},
  /// E_{k+2}) / E_{k-1}. CaseB: roots of the reversed polynomial in s with
  /// m = (E_{k+1}, E_k, E_{k-1}) / E_{k+2}. Empty when degenerate.
  std::vector<long double> roots;
  std::array<Rational, 3> vieta_moments;
  /// E_{k-1} (CaseA), E_{k+2} (CaseB), 0 (Degenerate).
  Rational scale;
  Cubic normalized;
  Rational discriminant;
  /// |p(r)| / max |coefficient| for each approximate root.
  std::vector<double> relative_residuals;
  /// Degenerate branch only: (aE_k+E_{k+1})^2/2 + a^2 E_k^2/2 + E_{k+1}^2/2.
  std::optional<Rational> degenerate_gap;
};

RootTriple reduce_to_three(const Tuple& x, int k, const Rational& alpha = Rational(0));

/// The two-term gap evaluated on the exact moments and multiplied back by
/// scale^2; equals gen_nm_gap(x, alpha, k) for the CaseA and CaseB branches.
Rational reduced_gap(const RootTriple& r, const Rational& alpha);

/// The three real roots of a monic cubic t^3 + p t^2 + q t + r with
/// nonnegative discriminant, by the trigonometric formula followed by one
/// exact Newton step. Ascending order.
std::array<long double, 3> real_cubic_roots(const Rational& p, const Rational& q, const Rational& r);

/// Exact value of a long double.
Rational from_long_double(long double v);

/// "%.21Lg" formatting; the precision is exposed for reports.
inline constexpr int kRootDigits = 21;
std::string format_root(long double v);

struct Lemma21Result {
  Rational gap;       ///< 18(aE1+E2)^2 - 18(a+E1)(aE2+E3)
  Rational residual;  ///< gap minus the three squares; identically zero
};

Lemma21Result lemma21_identity_residual(std::span<const Rational> z, const Rational& alpha);

}  // namespace symcert
