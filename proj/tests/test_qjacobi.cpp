#include <doctest.h>

#include "qzeta/qjacobi.hpp"
#include "qzeta/interval.hpp"

using namespace qzeta;

namespace {
RatPoly rp(std::vector<BigRational> c) { return RatPoly(std::move(c)); }
}  // namespace

TEST_CASE("p_{0,0} is the constant 1 by every route") {
  QContext ctx(2);
  for (const QJacobiPoly& f :
       {build_explicit(0, 0, ctx), build_pochhammer(0, 0, ctx), build_rodrigues(0, 0, ctx)}) {
    CHECK(f.monomial == RatPoly(BigRational(1)));
    CHECK(verify_orthogonality(f));
  }
  CHECK(leading_coefficient(0, 0, ctx) == 1);
  CHECK(eval_at_power(build_pochhammer(0, 0, ctx), 0) == 1);
}

TEST_CASE("p_{1,0} at q = 1/2 is 1 - (3/2) x") {
  QContext ctx(2);
  RatPoly expected = rp({BigRational(1), make_rational(-3, 2)});
  CHECK(build_explicit(1, 0, ctx).monomial == expected);
  CHECK(build_pochhammer(1, 0, ctx).monomial == expected);
  CHECK(build_rodrigues(1, 0, ctx).monomial == expected);

  // single orthogonality condition: 2 - (3/2)(4/3) = 0
  CHECK(integrate_dq(expected, ctx) == 0);
  CHECK(verify_orthogonality(build_explicit(1, 0, ctx)));

  CHECK(leading_coefficient(1, 0, ctx) == make_rational(-3, 2));
  CHECK(eval_at_power(build_pochhammer(1, 0, ctx), 1) == -2);
  CHECK(count_roots_in_unit_interval(build_explicit(1, 0, ctx)) == 1);  // root 2/3
}

TEST_CASE("three routes agree coefficientwise") {
  for (long p : {2L, 3L}) {
    QContext ctx(p);
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m <= n; ++m) {
        QJacobiPoly e = build_explicit(n, m, ctx);
        QJacobiPoly h = build_pochhammer(n, m, ctx);
        QJacobiPoly r = build_rodrigues(n, m, ctx);
        CHECK(e.monomial == h.monomial);
        CHECK(h.monomial == r.monomial);
        CHECK(e.monomial.coeff(0) == 1);
        CHECK(e.monomial.degree() == n + m);
        CHECK(leading_coefficient(n, m, ctx) == e.monomial.coeff(n + m));
      }
  }
}

TEST_CASE("build argument validation") {
  QContext ctx(2);
  CHECK_THROWS_AS(build_explicit(1, 2, ctx), std::invalid_argument);
  CHECK_THROWS_AS(build_pochhammer(0, 1, ctx), std::invalid_argument);
}

TEST_CASE("orthogonality holds for all m <= n <= 6, p in {2,3,5}") {
  for (long p : {2L, 3L, 5L}) {
    QContext ctx(p);
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= n; ++m)
        CHECK(verify_orthogonality(build_explicit(n, m, ctx)));
  }
}

TEST_CASE("orthogonality detects perturbations") {
  QContext ctx(2);
  QJacobiPoly f = build_explicit(3, 2, ctx);
  f.monomial += RatPoly::monomial(1, make_rational(1, 1000));
  CHECK(!verify_orthogonality(f));
}

TEST_CASE("root localization by Sturm chains") {
  QContext p2(2), p3(3);
  CHECK(count_roots_in_unit_interval(build_explicit(2, 1, p2)) == 3);
  CHECK(count_roots_in_unit_interval(build_explicit(4, 3, p3)) == 7);
  for (long p : {2L, 3L}) {
    QContext ctx(p);
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m <= n; ++m)
        CHECK(count_roots_in_unit_interval(build_explicit(n, m, ctx)) == n + m);
  }
}

TEST_CASE("Sturm chain rejects squarefree/endpoint violations") {
  // hand-built records with a double root at 1/2 and a root at 1
  QJacobiPoly doubled{2, 0, 2,
                      rp({BigRational(1), BigRational(-4), BigRational(4)}), {}};
  CHECK_THROWS_AS(count_roots_in_unit_interval(doubled), std::runtime_error);
  QJacobiPoly at_end{1, 0, 2, rp({BigRational(1), BigRational(-1)}), {}};
  CHECK_THROWS_AS(count_roots_in_unit_interval(at_end), std::runtime_error);
}

TEST_CASE("integer evaluation at z = p^{n+m}") {
  for (long p : {2L, 3L}) {
    QContext ctx(p);
    for (int n = 1; n <= 10; ++n) {
      QJacobiPoly f = build_pochhammer(n, n - 1, ctx);
      BigInt v = eval_at_power(f, 2 * n - 1);  // throws unless exact integer
      CHECK(v != 0);
    }
  }
  QContext ctx(2);
  CHECK_THROWS_AS(eval_at_power(build_pochhammer(2, 1, ctx), 4), std::invalid_argument);
  CHECK_THROWS_AS(eval_at_power(build_explicit(2, 1, ctx), 3), std::logic_error);
}

TEST_CASE("evaluation magnitude is sandwiched by the leading coefficient") {
  // |kappa| (z-1)^{n+m} <= |p_{n,m}(z)| <= |kappa| (z+1)^{n+m} at z = p^{n+m}
  for (long p : {2L, 3L}) {
    QContext ctx(p);
    for (int n = 1; n <= 6; ++n) {
      const int m = n - 1;
      BigRational kappa_abs = abs(leading_coefficient(n, m, ctx));
      BigRational z(pow_int(BigInt(p), static_cast<unsigned long>(n + m)));
      BigRational value_abs = abs(BigRational(eval_at_power(build_pochhammer(n, m, ctx),
                                                            n + m)));
      CHECK(value_abs >= kappa_abs * pow_rational(z - 1, n + m));
      CHECK(value_abs <= kappa_abs * pow_rational(z + 1, n + m));
    }
  }
}

TEST_CASE("normalized evaluation growth trends toward exponent 6") {
  // log_p |p_{n,n-1}(p^{2n-1})| / n^2 should move toward 6 as n grows
  for (long p : {2L, 3L}) {
    QContext ctx(p);
    auto exponent = [&](int n) {
      BigInt v = eval_at_power(build_pochhammer(n, n - 1, ctx), 2 * n - 1);
      RationalInterval lg = log_base(abs(BigRational(v)), p, 32);
      return lg.scaled(make_rational(1, BigInt(n) * n));
    };
    RationalInterval e2 = exponent(2), e4 = exponent(4), e8 = exponent(8);
    const BigRational six(6);
    CHECK(e2.hi < e4.lo);
    CHECK(e4.hi < e8.lo);
    CHECK(e8.hi < six);
    CHECK(abs(six - e8.hi) < abs(six - e4.lo));
  }
}

TEST_CASE("sum of absolute coefficients") {
  QContext ctx(2);
  CHECK(sum_abs_coeffs(build_explicit(1, 0, ctx)) == make_rational(5, 2));
}
