#pragma once

#include <utility>
#include <vector>

#include "symcert/rational.hpp"

namespace symcert {

/// Dense univariate polynomial over Q; coeffs()[i] multiplies t^i. The
/// representation is kept trimmed (no zero leading coefficient).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> ascending);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& p);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Euclidean division; throws on a zero divisor.
  static std::pair<UPoly, UPoly> divmod(const UPoly& num, const UPoly& den);

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly operator%(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Sturm chain p, p', -rem(p, p'), ...
std::vector<UPoly> sturm_sequence(const UPoly& p);

/// Number of distinct real roots, from sign variations of the Sturm chain at
/// -infinity and +infinity.
int distinct_real_roots(const UPoly& p);

/// Yun's square-free decomposition: p = lead * prod f_i^i. Returns (f_i, i)
/// for the non-constant factors.
std::vector<std::pair<UPoly, int>> square_free_decomposition(const UPoly& p);

/// Real roots counted with multiplicity.
int real_roots_with_multiplicity(const UPoly& p);

}  // namespace symcert
