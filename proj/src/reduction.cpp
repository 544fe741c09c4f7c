#include "symcert/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "symcert/errors.hpp"

namespace symcert {

namespace {

void require_cubic_range(const Tuple& x, int k, const char* who) {
  const int n = static_cast<int>(x.size());
  if (n < 3 || k < 1 || k > n - 2)
    throw RangeError(std::string(who) + ": requires n >= 3 and 1 <= k <= n-2, got (n,k) = (" +
                     std::to_string(n) + "," + std::to_string(k) + ")");
}

long double to_long_double(const Rational& q) {
  const double hi = q.get_d();
  const Rational rest = q - from_double(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

Rational abs_max(std::initializer_list<Rational> values) {
  Rational m = 0;
  for (const auto& v : values) m = std::max<Rational>(m, abs(v));
  return m;
}

}  // namespace

Rational from_long_double(long double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite root");
  const double hi = static_cast<double>(v);
  const double lo = static_cast<double>(v - static_cast<long double>(hi));
  return from_double(hi) + from_double(lo);
}

std::string format_root(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", kRootDigits, v);
  return buf;
}

Cubic associated_cubic(const Tuple& x, int k) {
  require_cubic_range(x, k, "associated_cubic");
  const MeanProfile e = MeanProfile::of(x);
  return {e[k - 1], -3 * e[k], 3 * e[k + 1], -e[k + 2]};
}

Rational cubic_discriminant(const Cubic& c) {
  if (c.c0 != 0) {
    return 18 * c.c0 * c.c1 * c.c2 * c.c3 - 4 * c.c1 * c.c1 * c.c1 * c.c3 +
           c.c1 * c.c1 * c.c2 * c.c2 - 4 * c.c0 * c.c2 * c.c2 * c.c2 -
           27 * c.c0 * c.c0 * c.c3 * c.c3;
  }
  if (c.c1 != 0) return c.c2 * c.c2 - 4 * c.c1 * c.c3;
  if (c.c2 != 0 || c.c3 != 0) return 1;  // linear or nonzero constant: no complex pair
  throw std::invalid_argument("cubic_discriminant: zero polynomial");
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

BinaryForm BinaryForm::d_dt() const {
  const int d = degree();
  BinaryForm out;
  for (int j = 0; j < d; ++j) out.coeffs.emplace_back(coeffs[static_cast<std::size_t>(j)] * (d - j));
  return out;
}

BinaryForm BinaryForm::d_ds() const {
  const int d = degree();
  BinaryForm out;
  for (int j = 1; j <= d; ++j) out.coeffs.emplace_back(coeffs[static_cast<std::size_t>(j)] * j);
  return out;
}

UPoly BinaryForm::dehomogenize() const {
  return UPoly(std::vector<Rational>(coeffs.rbegin(), coeffs.rend()));
}

int BinaryForm::multiplicity_at_infinity() const {
  int m = 0;
  for (const auto& c : coeffs) {
    if (c != 0) break;
    ++m;
  }
  return m;
}

BinaryForm homogenized_polynomial(const Tuple& x) {
  const SymProfile s = sigma_all(x);
  BinaryForm f;
  for (int j = 0; j <= s.n(); ++j) f.coeffs.emplace_back(j % 2 == 0 ? s[j] : Rational(-s[j]));
  return f;
}

namespace {

int projective_real_roots(const BinaryForm& f) {
  const UPoly p = f.dehomogenize();
  return real_roots_with_multiplicity(p) + (f.degree() - p.degree());
}

int multiplicity_at_zero(const UPoly& p) {
  int m = 0;
  while (m <= p.degree() && p.coeffs()[static_cast<std::size_t>(m)] == 0) ++m;
  return m;
}

UPoly drop_low(const UPoly& p, int m) {
  return UPoly(std::vector<Rational>(p.coeffs().begin() + m, p.coeffs().end()));
}

// A root of `child` of multiplicity m >= 2 must be a root of `parent` of
// multiplicity >= m + 1, except at the point the derivative is taken along
// ((1:0) for d/dt, (0:1) for d/ds), where parent multiplicity >= m suffices.
bool multiplicities_lift(const BinaryForm& child, const BinaryForm& parent, bool by_t) {
  if (child.is_zero()) return true;
  const int inf_child = child.multiplicity_at_infinity();
  const int inf_parent = parent.multiplicity_at_infinity();
  if (inf_child >= 2 && inf_parent < inf_child + (by_t ? 0 : 1)) return false;
  UPoly g = child.dehomogenize();
  UPoly f = parent.dehomogenize();
  if (!by_t) {
    const int z_child = multiplicity_at_zero(g);
    const int z_parent = multiplicity_at_zero(f);
    if (z_parent < z_child) return false;
    g = drop_low(g, z_child);
    f = drop_low(f, z_child);
  }
  const UPoly repeated = gcd(g, g.derivative());
  if (repeated.degree() < 1) return true;
  const UPoly radical = repeated / gcd(repeated, repeated.derivative());
  const UPoly required = repeated * radical * radical;
  return (f % required).is_zero();
}

}  // namespace

std::vector<std::vector<CascadeEntry>> derivative_cascade(const Tuple& x) {
  const int n = static_cast<int>(x.size());
  if (n < 3) throw RangeError("derivative_cascade: requires n >= 3");
  std::vector<std::vector<CascadeEntry>> levels;
  auto certify = [](CascadeEntry& e) {
    e.identically_zero = e.form.is_zero();
    if (e.identically_zero) {
      e.real_rooted = true;
      return;
    }
    e.real_roots = projective_real_roots(e.form);
    e.real_rooted = e.real_roots == e.form.degree();
  };

  CascadeEntry top;
  top.form = homogenized_polynomial(x);
  certify(top);
  levels.push_back({top});
  for (int level = 1; level <= n - 3; ++level) {
    const auto& prev = levels.back();
    std::vector<CascadeEntry> next;
    for (int j = 0; j <= level; ++j) {
      CascadeEntry e;
      e.s_derivs = j;
      e.t_derivs = level - j;
      // parent at index j (one fewer t-derivative) or j-1 (one fewer s-derivative)
      const CascadeEntry& parent = e.t_derivs > 0 ? prev[static_cast<std::size_t>(j)]
                                                  : prev[static_cast<std::size_t>(j - 1)];
      e.form = e.t_derivs > 0 ? parent.form.d_dt() : parent.form.d_ds();
      certify(e);
      e.multiplicity_consistent = multiplicities_lift(e.form, parent.form, e.t_derivs > 0);
      next.push_back(std::move(e));
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::CaseA: return "CaseA";
    case Branch::CaseB: return "CaseB";
    case Branch::Degenerate: return "Degenerate";
  }
  return "?";
}

std::array<long double, 3> real_cubic_roots(const Rational& p, const Rational& q, const Rational& r) {
  const Rational shift = -p / 3;
  const Rational dp = q - p * p / 3;
  const Rational dq = 2 * p * p * p / 27 - p * q / 3 + r;
  const long double s = to_long_double(shift);
  std::array<long double, 3> roots{};
  if (dp >= 0) {
    // triple root, or numerically a non-real pair: fall back to the real root
    const long double y = std::cbrt(-to_long_double(dq));
    roots = {s + y, s + y, s + y};
  } else {
    const long double P = to_long_double(dp);
    const long double Q = to_long_double(dq);
    const long double m = 2.0L * std::sqrt(-P / 3.0L);
    long double arg = (3.0L * Q / (2.0L * P)) * std::sqrt(-3.0L / P);
    arg = std::clamp(arg, -1.0L, 1.0L);
    const long double phi = std::acos(arg) / 3.0L;
    for (int i = 0; i < 3; ++i)
      roots[static_cast<std::size_t>(i)] =
          s + m * std::cos(phi - 2.0L * std::numbers::pi_v<long double> * i / 3.0L);
  }
  // one exact Newton step per root, kept only if it lowers |p(r)|
  const UPoly poly({r, q, p, Rational(1)});
  const UPoly dpoly = poly.derivative();
  for (auto& root : roots) {
    const Rational x0 = from_long_double(root);
    const Rational f0 = poly(x0);
    const Rational d0 = dpoly(x0);
    if (f0 == 0 || d0 == 0) continue;
    const long double candidate = to_long_double(x0 - f0 / d0);
    if (abs(poly(from_long_double(candidate))) < abs(f0)) root = candidate;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RootTriple reduce_to_three(const Tuple& x, int k, const Rational& alpha) {
  require_cubic_range(x, k, "reduce_to_three");
  const MeanProfile e = MeanProfile::of(x);
  RootTriple out;
  if (e[k - 1] != 0) {
    out.branch = Branch::CaseA;
    out.scale = e[k - 1];
    out.vieta_moments = {e[k] / e[k - 1], e[k + 1] / e[k - 1], e[k + 2] / e[k - 1]};
  } else if (e[k + 2] != 0) {
    out.branch = Branch::CaseB;
    out.scale = e[k + 2];
    out.vieta_moments = {e[k + 1] / e[k + 2], e[k] / e[k + 2], e[k - 1] / e[k + 2]};
  } else {
    out.branch = Branch::Degenerate;
    out.scale = 0;
    out.normalized = associated_cubic(x, k);
    const Rational u = alpha * e[k];
    const Rational v = e[k + 1];
    out.degenerate_gap = (u + v) * (u + v) / 2 + u * u / 2 + v * v / 2;
    // binary form reduces to 3E_{k+1} t s^2 - 3E_k t^2 s; roots t=0, s=0 and
    // E_{k+1}/E_k are real
    const Cubic& c = out.normalized;
    out.discriminant = c.c1 != 0 || c.c2 != 0 || c.c3 != 0 ? cubic_discriminant(c) : Rational(0);
    return out;
  }
  const auto& m = out.vieta_moments;
  out.normalized = {Rational(1), -3 * m[0], 3 * m[1], -m[2]};
  out.discriminant = cubic_discriminant(out.normalized);
  const auto roots = real_cubic_roots(out.normalized.c1, out.normalized.c2, out.normalized.c3);
  const UPoly poly = out.normalized.as_poly();
  const Rational scale = abs_max({out.normalized.c0, out.normalized.c1, out.normalized.c2,
                                  out.normalized.c3});
  for (long double root : roots) {
    out.roots.push_back(root);
    const Rational residual = abs(poly(from_long_double(root))) / scale;
    out.relative_residuals.push_back(residual.get_d());
  }
  return out;
}

Rational reduced_gap(const RootTriple& r, const Rational& alpha) {
  const auto& m = r.vieta_moments;
  switch (r.branch) {
    case Branch::CaseA: {
      // (a E1 + E2)^2 - (a + E1)(a E2 + E3) on the moments of z
      const Rational centre = alpha * m[0] + m[1];
      return r.scale * r.scale * (centre * centre - (alpha + m[0]) * (alpha * m[1] + m[2]));
    }
    case Branch::CaseB: {
      // same expression with the moment order reversed
      const Rational centre = alpha * m[1] + m[0];
      return r.scale * r.scale * (centre * centre - (alpha * m[2] + m[1]) * (alpha * m[0] + 1));
    }
    case Branch::Degenerate:
      return *r.degenerate_gap;
  }
  throw std::logic_error("reduced_gap: unknown branch");
}

Lemma21Result lemma21_identity_residual(std::span<const Rational> z, const Rational& alpha) {
  if (z.size() != 3)
    throw RangeError("lemma21_identity_residual: expected exactly 3 entries, got " +
                     std::to_string(z.size()));
  const Rational e1 = (z[0] + z[1] + z[2]) / 3;
  const Rational e2 = (z[0] * z[1] + z[0] * z[2] + z[1] * z[2]) / 3;
  const Rational e3 = z[0] * z[1] * z[2];
  const Rational centre = alpha * e1 + e2;
  Lemma21Result out;
  out.gap = 18 * centre * centre - 18 * (alpha + e1) * (alpha * e2 + e3);
  const Rational p12 = (z[0] + alpha) * (z[1] + alpha);
  const Rational p13 = (z[0] + alpha) * (z[2] + alpha);
  const Rational p23 = (z[1] + alpha) * (z[2] + alpha);
  const Rational squares =
      (p12 - p13) * (p12 - p13) + (p12 - p23) * (p12 - p23) + (p13 - p23) * (p13 - p23);
  out.residual = out.gap - squares;
  return out;
}

}  // namespace symcert
