#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "symcert/mpoly.hpp"
#include "symcert/rational.hpp"
#include "symcert/symmetric.hpp"

namespace symcert {

/// a = C(n,k-1), b = C(n,k), c = C(n,k+1), d = C(n,k+2).
struct BinomQuad {
  Integer a, b, c, d;
  friend bool operator==(const BinomQuad&, const BinomQuad&) = default;
};

/// Constants of the sum-of-squares decomposition
///   L(z) = theta1 (alpha b s1 + c s2)^2 + theta2 W(z,t) + V(z)
/// for one admissible (n, k), n >= 4 and 1 <= k <= n-2.
struct CertConstants {
  int n = 0;
  int k = 0;
  BinomQuad quad;
  Rational theta1, theta2, t, A1, A2, A3;

  /// A1 A2 - A3^2 / 36; positive exactly when V is a positive semidefinite
  /// combination of the three pairwise AM-GM bounds.
  Rational discriminant() const { return A1 * A2 - A3 * A3 / 36; }
};

BinomQuad binom_quad(int n, int k);
CertConstants cert_constants(int n, int k);

/// Residuals of the three coefficient-matching equations (in s1 s2, s1 s3 and
/// s2) that determine theta1, theta2 and t. All zero for valid constants.
std::array<Rational, 3> coefficient_system_residuals(const CertConstants& cc);

using Triple = std::span<const Rational>;

/// W(z,t) = (z1-z2)^2 (alpha + t z3)^2 + (z1-z3)^2 (alpha + t z2)^2
///        + (z2-z3)^2 (alpha + t z1)^2.
Rational w_value(Triple z, const Rational& alpha, const Rational& t);
/// W in expanded symmetric-function form; equal to w_value identically.
Rational w_expanded(Triple z, const Rational& alpha, const Rational& t);

/// V(z) = A1 alpha^2 sum z_i^2 + A2 sum_{p<q} z_p^2 z_q^2 + A3 alpha s3.
Rational v_value(Triple z, const Rational& alpha, const CertConstants& cc);

/// L(z) = (alpha b s1 + c s2)^2 - (3 alpha a + b s1)(alpha c s2 + 3 d s3).
Rational l_value(Triple z, const Rational& alpha, int n, int k);
/// L in the expanded form with sum z_i^2 and sum z_p^2 z_q^2.
Rational l_expanded(Triple z, const Rational& alpha, int n, int k);

/// L - theta1 (alpha b s1 + c s2)^2 - theta2 W - V; identically zero.
Rational decomposition_residual(Triple z, const Rational& alpha, int n, int k);

/// Result of expanding both sides of the decomposition as polynomials in
/// (alpha, z1, z2, z3) and comparing every coefficient.
struct SymbolicCheck {
  int n = 0;
  int k = 0;
  bool decomposition_holds = false;
  bool l_expansion_holds = false;
  bool w_expansion_holds = false;
  bool coefficient_system_holds = false;
  std::size_t monomials_compared = 0;
  /// Monomials of L whose coefficient disagrees with the right-hand side.
  std::vector<std::array<std::uint8_t, 4>> mismatches;

  bool ok() const {
    return decomposition_holds && l_expansion_holds && w_expansion_holds &&
           coefficient_system_holds;
  }
};

SymbolicCheck symbolic_decomposition_check(int n, int k);

struct Lemma31Report {
  Integer three_bd_minus_c2;
  Integer three_ac_minus_b2;
  Integer theta1_numerator;  ///< 2ac^3 + 2b^3 d - b^2 c^2 - 3abcd
  bool ok() const {
    return three_bd_minus_c2 > 0 && three_ac_minus_b2 > 0 && theta1_numerator > 0;
  }
};

struct Lemma32Report {
  Rational A1, A2, A3;
  Rational discriminant;  ///< A1 A2 - A3^2/36
  bool ok() const { return A1 > 0 && A2 > 0 && discriminant > 0; }
};

Lemma31Report lemma31_check(int n, int k);
Lemma32Report lemma32_check(int n, int k);

/// Values of the auxiliary polynomials f1..f4 at one integer k.
struct FRow {
  int k = 0;
  std::array<Integer, 4> f;
  bool ok() const { return f[0] > 0 && f[1] > 0 && f[2] > 0 && f[3] > 0; }
};

/// f1(k) = -2k^2 + 2(n-2)k + (n-3)
/// f2(k) = -k^3 + (n-5)k^2 + (3n-2)k - n - 1
/// f3(k) = k^3 - (2n+2)k^2 + (n^2+3n-5)k - n^2 + 2n - 3
/// f4(k) = -(n+5)k^2 + (n^2+4n-5)k - n^2 + 1
std::array<Integer, 4> f_values(int n, int k);

/// f1..f4 at every k in [1, n-2]; n >= 4.
std::vector<FRow> f_scan(int n);

/// Everything checked for one (n, k) by the lemma scan.
struct LemmaRow {
  int n = 0;
  int k = 0;
  Lemma31Report lemma31;
  Lemma32Report lemma32;
  FRow f;
  Rational theta1, theta2;
  bool bc_below_9ad = false;
  bool mirror_symmetric = false;  ///< theta1(n,k) == theta1(n,n-1-k) under a<->d, b<->c
  bool endpoints_ok = false;      ///< f values at k=1 and k=n-2 equal 3(n-3)

  bool theta1_in_unit_interval() const { return theta1 > 0 && theta1 < 1; }
  bool ok() const {
    return lemma31.ok() && lemma32.ok() && f.ok() && theta1_in_unit_interval() && theta2 > 0 &&
           bc_below_9ad && mirror_symmetric && endpoints_ok;
  }
};

LemmaRow lemma_row(int n, int k);

/// All rows for n_min <= n <= n_max, ordered by (n, k). Rows are computed on
/// up to `threads` workers; the output order does not depend on it.
std::vector<LemmaRow> lemma_scan(int n_min, int n_max, unsigned threads = 1);

enum class SpecialCase { K0, KN1, N3K1 };
std::string_view to_string(SpecialCase c);
SpecialCase parse_special_case(std::string_view text);

/// The theta = 1/2 gaps of the special cases k = 0, k = n-1, and n = 3, k = 1.
Rational special_case_gap(const Tuple& x, const Rational& alpha, SpecialCase which);

/// Certified admissible theta for (n, k): 1/2 at k = 0, k = n-1 and
/// (n,k) = (3,1); theta1(n,k) otherwise. n >= 3, 0 <= k <= n-1.
Rational theta_for(int n, int k);

}  // namespace symcert
