#include "symcert/certificate.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "symcert/errors.hpp"

namespace symcert {

namespace {

void require_general_range(int n, int k, const char* who) {
  if (n < 4 || k < 1 || k > n - 2)
    throw RangeError(std::string(who) + ": requires n >= 4 and 1 <= k <= n-2, got (n,k) = (" +
                     std::to_string(n) + "," + std::to_string(k) + ")");
}

void require_triple(Triple z, const char* who) {
  if (z.size() != 3)
    throw RangeError(std::string(who) + ": expected exactly 3 entries, got " +
                     std::to_string(z.size()));
}

struct ThreeSigmas {
  Rational s1, s2, s3, squares, pair_squares;
};

ThreeSigmas sigmas_of(Triple z) {
  ThreeSigmas s;
  s.s1 = z[0] + z[1] + z[2];
  s.s2 = z[0] * z[1] + z[0] * z[2] + z[1] * z[2];
  s.s3 = z[0] * z[1] * z[2];
  s.squares = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
  s.pair_squares = z[0] * z[0] * z[1] * z[1] + z[0] * z[0] * z[2] * z[2] + z[1] * z[1] * z[2] * z[2];
  return s;
}

Rational leading_square(const ThreeSigmas& s, const Rational& alpha, const BinomQuad& q) {
  const Rational base = alpha * Rational(q.b) * s.s1 + Rational(q.c) * s.s2;
  return base * base;
}

}  // namespace

BinomQuad binom_quad(int n, int k) {
  require_general_range(n, k, "binom_quad");
  return {binomial(n, k - 1), binomial(n, k), binomial(n, k + 1), binomial(n, k + 2)};
}

CertConstants cert_constants(int n, int k) {
  CertConstants cc;
  cc.n = n;
  cc.k = k;
  cc.quad = binom_quad(n, k);
  const Rational a(cc.quad.a), b(cc.quad.b), c(cc.quad.c), d(cc.quad.d);
  const Rational b2 = b * b, c2 = c * c;
  const Rational denom = 6 * a * c2 * c + 6 * b2 * b * d - 4 * b2 * c2;
  cc.theta1 = 3 * (2 * a * c2 * c + 2 * b2 * b * d - b2 * c2 - 3 * a * b * c * d) / denom;
  const Rational gap_ac = 3 * a * c - b2;
  cc.theta2 = c2 * gap_ac * gap_ac / denom;
  cc.t = b * (3 * b * d - c2) / (c * gap_ac);
  cc.A1 = b2 * (1 - cc.theta1) - 2 * cc.theta2;
  cc.A2 = c2 * (1 - cc.theta1) - 2 * cc.t * cc.t * cc.theta2;
  cc.A3 = 18 * cc.t * cc.theta2 - 9 * a * d;
  return cc;
}

std::array<Rational, 3> coefficient_system_residuals(const CertConstants& cc) {
  const Rational a(cc.quad.a), b(cc.quad.b), c(cc.quad.c), d(cc.quad.d);
  const Rational& th1 = cc.theta1;
  const Rational& th2 = cc.theta2;
  const Rational& t = cc.t;
  return {
      Rational(b * c - (2 * b * c * th1 + 2 * t * th2)),
      Rational(2 * c * c - 3 * b * d - (2 * c * c * th1 - 2 * t * t * th2)),
      Rational(2 * b * b - 3 * a * c - (2 * b * b * th1 - 2 * th2)),
  };
}

Rational w_value(Triple z, const Rational& alpha, const Rational& t) {
  require_triple(z, "w_value");
  auto piece = [&](const Rational& p, const Rational& q, const Rational& r) {
    const Rational diff = p - q;
    const Rational lin = alpha + t * r;
    return Rational(diff * diff * lin * lin);
  };
  return piece(z[0], z[1], z[2]) + piece(z[0], z[2], z[1]) + piece(z[1], z[2], z[0]);
}

Rational w_expanded(Triple z, const Rational& alpha, const Rational& t) {
  require_triple(z, "w_expanded");
  const ThreeSigmas s = sigmas_of(z);
  const Rational a2 = alpha * alpha;
  return 2 * a2 * s.squares - 2 * a2 * s.s2 + 2 * alpha * t * s.s1 * s.s2 +
         2 * t * t * s.pair_squares - 2 * t * t * s.s1 * s.s3 - 18 * alpha * t * s.s3;
}

Rational v_value(Triple z, const Rational& alpha, const CertConstants& cc) {
  require_triple(z, "v_value");
  const ThreeSigmas s = sigmas_of(z);
  return cc.A1 * alpha * alpha * s.squares + cc.A2 * s.pair_squares + cc.A3 * alpha * s.s3;
}

Rational l_value(Triple z, const Rational& alpha, int n, int k) {
  require_triple(z, "l_value");
  const BinomQuad q = binom_quad(n, k);
  const ThreeSigmas s = sigmas_of(z);
  const Rational a(q.a), b(q.b), c(q.c), d(q.d);
  return leading_square(s, alpha, q) -
         (3 * alpha * a + b * s.s1) * (alpha * c * s.s2 + 3 * d * s.s3);
}

Rational l_expanded(Triple z, const Rational& alpha, int n, int k) {
  require_triple(z, "l_expanded");
  const BinomQuad q = binom_quad(n, k);
  const ThreeSigmas s = sigmas_of(z);
  const Rational a(q.a), b(q.b), c(q.c), d(q.d);
  const Rational a2 = alpha * alpha;
  return a2 * b * b * s.squares + a2 * (2 * b * b - 3 * a * c) * s.s2 + alpha * b * c * s.s1 * s.s2 +
         c * c * s.pair_squares + (2 * c * c - 3 * b * d) * s.s1 * s.s3 - 9 * alpha * a * d * s.s3;
}

Rational decomposition_residual(Triple z, const Rational& alpha, int n, int k) {
  require_triple(z, "decomposition_residual");
  const CertConstants cc = cert_constants(n, k);
  const ThreeSigmas s = sigmas_of(z);
  return l_value(z, alpha, n, k) - cc.theta1 * leading_square(s, alpha, cc.quad) -
         cc.theta2 * w_value(z, alpha, cc.t) - v_value(z, alpha, cc);
}

SymbolicCheck symbolic_decomposition_check(int n, int k) {
  using P = MPoly<4>;
  const CertConstants cc = cert_constants(n, k);
  const Rational a(cc.quad.a), b(cc.quad.b), c(cc.quad.c), d(cc.quad.d);

  const P alpha = P::variable(0);
  const std::array<P, 3> z{P::variable(1), P::variable(2), P::variable(3)};
  const P s1 = z[0] + z[1] + z[2];
  const P s2 = z[0] * z[1] + z[0] * z[2] + z[1] * z[2];
  const P s3 = z[0] * z[1] * z[2];
  const P squares = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
  const P pair_squares =
      z[0] * z[0] * z[1] * z[1] + z[0] * z[0] * z[2] * z[2] + z[1] * z[1] * z[2] * z[2];

  const P base = P(b) * alpha * s1 + P(c) * s2;
  const P lhs = base * base - (P(3 * a) * alpha + P(b) * s1) * (P(c) * alpha * s2 + P(3 * d) * s3);

  auto w_piece = [&](const P& p, const P& q, const P& r) {
    const P diff = p - q;
    const P lin = alpha + P(cc.t) * r;
    return diff * diff * lin * lin;
  };
  const P w = w_piece(z[0], z[1], z[2]) + w_piece(z[0], z[2], z[1]) + w_piece(z[1], z[2], z[0]);
  const P v = P(cc.A1) * alpha * alpha * squares + P(cc.A2) * pair_squares + P(cc.A3) * alpha * s3;
  const P rhs = P(cc.theta1) * base * base + P(cc.theta2) * w + v;

  const P a2 = alpha * alpha;
  const P l_exp = P(b * b) * a2 * squares + P(2 * b * b - 3 * a * c) * a2 * s2 +
                  P(b * c) * alpha * s1 * s2 + P(c * c) * pair_squares +
                  P(2 * c * c - 3 * b * d) * s1 * s3 - P(9 * a * d) * alpha * s3;
  const P t(cc.t);
  const P w_exp = P(2) * a2 * squares - P(2) * a2 * s2 + P(2) * alpha * t * s1 * s2 +
                  P(2) * t * t * pair_squares - P(2) * t * t * s1 * s3 - P(18) * alpha * t * s3;

  SymbolicCheck out;
  out.n = n;
  out.k = k;
  const P diff = lhs - rhs;
  out.decomposition_holds = diff.is_zero();
  for (const auto& [e, coeff] : diff.terms()) out.mismatches.push_back(e);
  // every monomial present on either side
  std::map<P::Exponents, bool> seen;
  for (const auto& [e, coeff] : lhs.terms()) seen[e] = true;
  for (const auto& [e, coeff] : rhs.terms()) seen[e] = true;
  out.monomials_compared = seen.size();
  out.l_expansion_holds = (lhs - l_exp).is_zero();
  out.w_expansion_holds = (w - w_exp).is_zero();
  const auto res = coefficient_system_residuals(cc);
  out.coefficient_system_holds = std::all_of(res.begin(), res.end(), [](const Rational& r) { return r == 0; });
  return out;
}

Lemma31Report lemma31_check(int n, int k) {
  const BinomQuad q = binom_quad(n, k);
  const Integer &a = q.a, &b = q.b, &c = q.c, &d = q.d;
  Lemma31Report r;
  r.three_bd_minus_c2 = 3 * b * d - c * c;
  r.three_ac_minus_b2 = 3 * a * c - b * b;
  r.theta1_numerator = 2 * a * c * c * c + 2 * b * b * b * d - b * b * c * c - 3 * a * b * c * d;
  return r;
}

Lemma32Report lemma32_check(int n, int k) {
  const CertConstants cc = cert_constants(n, k);
  return {cc.A1, cc.A2, cc.A3, cc.discriminant()};
}

std::array<Integer, 4> f_values(int n, int k) {
  const Integer N = n, K = k;
  const Integer K2 = K * K, K3 = K2 * K, N2 = N * N;
  return {
      Integer(-2 * K2 + 2 * (N - 2) * K + (N - 3)),
      Integer(-K3 + (N - 5) * K2 + (3 * N - 2) * K - N - 1),
      Integer(K3 - (2 * N + 2) * K2 + (N2 + 3 * N - 5) * K - N2 + 2 * N - 3),
      Integer(-(N + 5) * K2 + (N2 + 4 * N - 5) * K - N2 + 1),
  };
}

std::vector<FRow> f_scan(int n) {
  if (n < 4) throw RangeError("f_scan: requires n >= 4, got n = " + std::to_string(n));
  std::vector<FRow> rows;
  for (int k = 1; k <= n - 2; ++k) rows.push_back({k, f_values(n, k)});
  return rows;
}

namespace {

bool f_endpoints_ok(int n) {
  const Integer expected = 3 * (n - 3);
  const auto lo = f_values(n, 1);
  const auto hi = f_values(n, n - 2);
  return lo[0] == expected && lo[1] == expected && hi[1] == expected && lo[2] == expected &&
         hi[2] == expected && lo[3] == expected && hi[3] == expected;
}

}  // namespace

LemmaRow lemma_row(int n, int k) {
  LemmaRow row;
  row.n = n;
  row.k = k;
  row.lemma31 = lemma31_check(n, k);
  const CertConstants cc = cert_constants(n, k);
  row.lemma32 = {cc.A1, cc.A2, cc.A3, cc.discriminant()};
  row.f = {k, f_values(n, k)};
  row.theta1 = cc.theta1;
  row.theta2 = cc.theta2;
  row.bc_below_9ad = cc.quad.b * cc.quad.c < 9 * cc.quad.a * cc.quad.d;
  const CertConstants mirror = cert_constants(n, n - 1 - k);
  row.mirror_symmetric = mirror.quad == BinomQuad{cc.quad.d, cc.quad.c, cc.quad.b, cc.quad.a} &&
                         mirror.theta1 == cc.theta1;
  row.endpoints_ok = f_endpoints_ok(n);
  return row;
}

std::vector<LemmaRow> lemma_scan(int n_min, int n_max, unsigned threads) {
  if (n_min < 4) throw RangeError("lemma_scan: requires n_min >= 4");
  std::vector<std::pair<int, int>> pairs;
  for (int n = n_min; n <= n_max; ++n)
    for (int k = 1; k <= n - 2; ++k) pairs.emplace_back(n, k);
  std::vector<LemmaRow> rows(pairs.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < pairs.size(); i += threads)
      rows[i] = lemma_row(pairs[i].first, pairs[i].second);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  return rows;
}

std::string_view to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::K0: return "K0";
    case SpecialCase::KN1: return "KN1";
    case SpecialCase::N3K1: return "N3K1";
  }
  return "?";
}

SpecialCase parse_special_case(std::string_view text) {
  if (text == "K0" || text == "k0") return SpecialCase::K0;
  if (text == "KN1" || text == "kn1") return SpecialCase::KN1;
  if (text == "N3K1" || text == "n3k1") return SpecialCase::N3K1;
  throw std::invalid_argument("unknown special case '" + std::string(text) +
                              "' (expected K0, KN1 or N3K1)");
}

Rational special_case_gap(const Tuple& x, const Rational& alpha, SpecialCase which) {
  const SymProfile s = sigma_all(x);
  const int n = s.n();
  const Rational half(1, 2);
  switch (which) {
    case SpecialCase::K0: {
      const Rational centre = alpha + s[1];
      return half * centre * centre - (alpha * s[1] + s[2]);
    }
    case SpecialCase::KN1: {
      const Rational centre = alpha * s[n - 1] + s[n];
      return half * centre * centre - (alpha * s[n - 2] + s[n - 1]) * alpha * s[n];
    }
    case SpecialCase::N3K1: {
      if (n != 3)
        throw RangeError("special_case_gap: case N3K1 needs exactly 3 entries, got " +
                         std::to_string(n));
      const Rational centre = alpha * s[1] + s[2];
      return half * centre * centre - (alpha + s[1]) * (alpha * s[2] + s[3]);
    }
  }
  throw std::invalid_argument("special_case_gap: unknown case");
}

Rational theta_for(int n, int k) {
  if (n < 3 || k < 0 || k > n - 1)
    throw RangeError("theta_for: requires n >= 3 and 0 <= k <= n-1, got (n,k) = (" +
                     std::to_string(n) + "," + std::to_string(k) + ")");
  if (k == 0 || k == n - 1 || (n == 3 && k == 1)) return Rational(1, 2);
  return cert_constants(n, k).theta1;
}

}  // namespace symcert
