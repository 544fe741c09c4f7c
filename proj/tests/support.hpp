#pragma once

#include <random>
#include <vector>

#include "symcert/rational.hpp"
#include "symcert/symmetric.hpp"

namespace symcert::testing {

/// Small-denominator rational in [-bound, bound].
inline Rational small_rational(std::mt19937_64& rng, long bound = 10, long max_den = 9) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(-bound * d, bound * d);
  Rational q(num(rng), d);
  q.canonicalize();
  return q;
}

inline Rational nonneg_rational(std::mt19937_64& rng, long bound = 10, long max_den = 9) {
  return abs(small_rational(rng, bound, max_den));
}

inline Tuple random_tuple(std::mt19937_64& rng, int n, long bound = 10, long max_den = 9) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(small_rational(rng, bound, max_den));
  return Tuple(std::move(v));
}

inline Tuple nonneg_tuple(std::mt19937_64& rng, int n, long bound = 10, long max_den = 9) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(nonneg_rational(rng, bound, max_den));
  return Tuple(std::move(v));
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

}  // namespace symcert::testing
