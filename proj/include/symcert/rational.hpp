#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symcert {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

/// Parse "p/q", a signed integer, or a decimal such as "-0.25" / "1.5e-3".
/// Decimals are converted exactly (0.1 == 1/10). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator ("3", "-7").
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Sign as -1, 0, +1.
inline int sign(const Rational& q) { return sgn(q); }

/// Integer power q^e, exact. e may be zero.
Rational pow(const Rational& q, unsigned long e);

/// Exact conversion from a finite double (every double is a dyadic rational).
Rational from_double(double v);

/// Best rational approximation of v with denominator <= max_den, computed
/// from the continued fraction expansion.
Rational rationalize(double v, const Integer& max_den);

}  // namespace symcert
