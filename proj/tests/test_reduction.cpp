#include "doctest.h"

#include <cmath>
#include <random>

#include "support.hpp"
#include "symcert/errors.hpp"
#include "symcert/inequalities.hpp"
#include "symcert/reduction.hpp"

using namespace symcert;
using symcert::testing::q;

TEST_CASE("upoly: Sturm counts and square-free decomposition") {
  // (t-1)^2 (t+2) (t^2+1)
  const UPoly p = UPoly({q(-1), q(1)}) * UPoly({q(-1), q(1)}) * UPoly({q(2), q(1)}) *
                  UPoly({q(1), q(0), q(1)});
  CHECK(p.degree() == 5);
  CHECK(distinct_real_roots(p) == 2);
  CHECK(real_roots_with_multiplicity(p) == 3);
  const auto sqf = square_free_decomposition(p);
  REQUIRE(sqf.size() == 2);
  CHECK(sqf[0].second == 1);
  CHECK(sqf[0].first.degree() == 3);
  CHECK(sqf[1].second == 2);
  CHECK(sqf[1].first == UPoly({q(-1), q(1)}));
  CHECK(distinct_real_roots(UPoly({q(1), q(0), q(1)})) == 0);
  CHECK(distinct_real_roots(UPoly({q(5)})) == 0);
  CHECK_THROWS(distinct_real_roots(UPoly()));
  CHECK(gcd(UPoly({q(-1), q(0), q(1)}), UPoly({q(2), q(-3), q(1)})) == UPoly({q(-1), q(1)}));
}

TEST_CASE("associated_cubic") {
  CHECK(associated_cubic(Tuple{q(1), q(1), q(1), q(1)}, 1) == Cubic{q(1), q(-3), q(3), q(-1)});
  CHECK(associated_cubic(Tuple{q(1), q(2), q(3), q(4)}, 1) ==
        Cubic{q(1), q(-15, 2), q(35, 2), q(-25, 2)});
  CHECK(associated_cubic(Tuple{q(1), q(-1), q(0)}, 1) == Cubic{q(1), q(0), q(-1), q(0)});
  CHECK_THROWS_AS(associated_cubic(Tuple{q(1), q(2), q(3)}, 2), RangeError);
}

TEST_CASE("cubic_discriminant") {
  CHECK(cubic_discriminant({q(1), q(-3), q(3), q(-1)}) == 0);
  CHECK(cubic_discriminant(associated_cubic(Tuple{q(1), q(2), q(3), q(4)}, 1)) == q(125, 16));
  CHECK(cubic_discriminant({q(1), q(0), q(1), q(0)}) == -4);
  // quadratic after the leading coefficient vanishes: -3t^2 + 3t s^2 ...
  CHECK(cubic_discriminant({q(0), q(1), q(0), q(-1)}) == 4);
  CHECK(cubic_discriminant({q(0), q(1), q(0), q(1)}) == -4);
  CHECK(cubic_discriminant({q(0), q(0), q(2), q(1)}) == 1);
  CHECK_THROWS_AS(cubic_discriminant({q(0), q(0), q(0), q(0)}), std::invalid_argument);
}

TEST_CASE("derivative_cascade") {
  const auto three = derivative_cascade(Tuple{q(1), q(2), q(3)});
  REQUIRE(three.size() == 1);
  CHECK(three[0][0].real_rooted);
  CHECK(three[0][0].real_roots == 3);

  const Tuple x{q(1), q(2), q(3), q(4)};
  const auto four = derivative_cascade(x);
  REQUIRE(four.size() == 2);
  REQUIRE(four[1].size() == 2);
  for (std::size_t j = 0; j < 2; ++j) {
    const CascadeEntry& e = four[1][j];
    CHECK(e.real_rooted);
    CHECK(e.real_roots == 3);
    // proportional to the associated cubic for k = j + 1
    const Cubic c = associated_cubic(x, static_cast<int>(j) + 1);
    const Rational ratio = e.form.coeffs[0] / c.c0;
    CHECK(e.form.coeffs[1] == ratio * c.c1);
    CHECK(e.form.coeffs[2] == ratio * c.c2);
    CHECK(e.form.coeffs[3] == ratio * c.c3);
  }

  const auto repeated = derivative_cascade(Tuple{q(1), q(1), q(1), q(2), q(2), q(-3)});
  REQUIRE(repeated.size() == 4);
  REQUIRE(repeated.back().size() == 4);
  for (const auto& level : repeated)
    for (const auto& e : level) {
      CHECK(e.real_rooted);
      CHECK(e.multiplicity_consistent);
    }

  // F = t^n: the s-derivatives vanish identically
  const auto zeros = derivative_cascade(Tuple{q(0), q(0), q(0), q(0)});
  CHECK(zeros[1][1].identically_zero);
  CHECK(zeros[1][0].real_rooted);
}

TEST_CASE("reduce_to_three branches") {
  const RootTriple a = reduce_to_three(Tuple{q(1), q(2), q(3), q(4)}, 1);
  CHECK(a.branch == Branch::CaseA);
  CHECK(a.vieta_moments[0] == q(5, 2));
  CHECK(a.vieta_moments[1] == q(35, 6));
  CHECK(a.vieta_moments[2] == q(25, 2));
  CHECK(a.discriminant == q(125, 16));
  REQUIRE(a.roots.size() == 3);
  for (double r : a.relative_residuals) CHECK(r < 1e-12);

  const RootTriple c = reduce_to_three(Tuple{q(3, 2), q(3, 2), q(3, 2), q(3, 2), q(3, 2)}, 2);
  CHECK(c.branch == Branch::CaseA);
  CHECK(c.discriminant == 0);
  for (long double r : c.roots) CHECK(std::fabs(static_cast<double>(r) - 1.5) < 1e-6);

  const Tuple degenerate{q(1), q(-1), q(0), q(0), q(0)};
  const MeanProfile e = MeanProfile::of(degenerate);
  CHECK(e[1] == 0);
  CHECK(e[4] == 0);
  const RootTriple d = reduce_to_three(degenerate, 2, q(3));
  CHECK(d.branch == Branch::Degenerate);
  REQUIRE(d.degenerate_gap.has_value());
  CHECK(*d.degenerate_gap >= 0);
  CHECK(*d.degenerate_gap == gen_nm_gap(degenerate, q(3), 2).gap);
  CHECK(d.roots.empty());

  const Tuple b{q(1), q(-1), q(2), q(-2)};
  const RootTriple rb = reduce_to_three(b, 2, q(5, 3));
  CHECK(rb.branch == Branch::CaseB);
  CHECK(rb.vieta_moments[2] == 0);
  CHECK(reduced_gap(rb, q(5, 3)) == gen_nm_gap(b, q(5, 3), 2).gap);
  for (double r : rb.relative_residuals) CHECK(r < 1e-12);
}

TEST_CASE("lemma21_identity_residual") {
  const auto r = lemma21_identity_residual(std::vector<Rational>{q(1), q(2), q(3)}, q(0));
  CHECK(r.gap == 26);
  CHECK(r.residual == 0);
  CHECK(lemma21_identity_residual(std::vector<Rational>{q(4), q(4), q(4)}, q(9)).gap == 0);
  const Rational alpha = q(-7, 4);
  CHECK(lemma21_identity_residual(std::vector<Rational>{-alpha, -alpha, q(11)}, alpha).gap == 0);
  CHECK_THROWS_AS(lemma21_identity_residual(std::vector<Rational>{q(1)}, q(0)), RangeError);
}

TEST_CASE("property: reduction invariants on random tuples") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 400; ++rep) {
    const int n = symcert::testing::uniform_int(rng, 3, 9);
    const int k = symcert::testing::uniform_int(rng, 1, n - 2);
    const Tuple x = symcert::testing::random_tuple(rng, n);
    const Rational alpha = symcert::testing::small_rational(rng);
    const Cubic c = associated_cubic(x, k);
    if (c.c0 != 0 || c.c1 != 0 || c.c2 != 0 || c.c3 != 0) CHECK(cubic_discriminant(c) >= 0);
    const RootTriple r = reduce_to_three(x, k, alpha);
    CHECK(reduced_gap(r, alpha) == gen_nm_gap(x, alpha, k).gap);
    for (double res : r.relative_residuals) CHECK(res < 1e-12);
    if (r.branch != Branch::Degenerate) {
      const auto l21 = lemma21_identity_residual(
          std::vector<Rational>{from_long_double(r.roots[0]), from_long_double(r.roots[1]),
                                from_long_double(r.roots[2])},
          alpha);
      CHECK(l21.residual == 0);
    }
  }
}

TEST_CASE("property: cascade real-rootedness") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = symcert::testing::uniform_int(rng, 3, 7);
    const Tuple x = symcert::testing::random_tuple(rng, n, 4, 3);
    for (const auto& level : derivative_cascade(x))
      for (const auto& e : level) {
        CHECK(e.real_rooted);
        CHECK(e.multiplicity_consistent);
      }
  }
}
