#include <doctest.h>

#include "qzeta/approximants.hpp"
#include "support/oracles.hpp"

using namespace qzeta;

TEST_CASE("numerator closed forms match the divided-difference oracles") {
  // oracle: q_{n,m}(z) = sum_l q^l (p(z)-p(q^l))/(z-q^l) integrated through
  // closed-form moments, computed from the monomial form of p_{n,m}
  for (long p : {2L, 3L}) {
    QContext ctx(p);
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= n; ++m) {
        RatPoly poly = build_explicit(n, m, ctx).monomial;
        BigRational z(pow_int(BigInt(p), static_cast<unsigned long>(n + m)));
        CHECK(q_numerator_at_power(n, m, ctx) ==
              oracles::divided_difference_mu1(poly, z, ctx));
        CHECK(r_numerator_at_power(n, m, ctx) ==
              oracles::divided_difference_mu2(poly, z, ctx));
      }
  }
}

TEST_CASE("numerator values frozen from the oracles at tiny indices") {
  QContext p2(2), p3(3);
  CHECK(q_numerator_at_power(0, 0, p2) == 0);
  CHECK(r_numerator_at_power(0, 0, p2) == 0);
  // linear p_{1,0}: q_{1,0}(z) = -(1+q)/(1-q) = -3, independent of z
  CHECK(q_numerator_at_power(1, 0, p2) == -3);
  // r_{1,0}(z) = -(1+q) * sum l q^l = -(3/2)(2) = -3
  CHECK(r_numerator_at_power(1, 0, p2) == -3);
  CHECK(q_numerator_at_power(2, 1, p3) ==
        oracles::divided_difference_mu1(build_explicit(2, 1, p3).monomial,
                                        BigRational(27), p3));
}

TEST_CASE("d-multiples of the evaluated numerators are integers") {
  CycloTable table;
  for (long p : {2L, 3L}) {
    QContext ctx(p);
    for (int n = 0; n <= 8; ++n)
      for (int m = 0; m <= n; ++m) {
        if (n + m == 0) continue;
        const BigInt& d = table.d_eval(n + m, p);
        BigRational dq = BigRational(d) * q_numerator_at_power(n, m, ctx);
        BigRational d2r = BigRational(d * d) * r_numerator_at_power(n, m, ctx);
        CHECK(is_integral(dq));
        CHECK(is_integral(d2r));
      }
  }
}

TEST_CASE("build_row: hand values at n = 1, p = 2") {
  QContext ctx(2);
  CycloTable table;
  ApproximantRow row = build_row(1, ctx, table);
  CHECK(row.d == 1);
  CHECK(row.pnm_value == -2);
  CHECK(row.qnm_value == -3);
  CHECK(row.rnm_value == -3);
  CHECK(row.beta == -2);
  CHECK(row.alpha == -3);
  CHECK(row.b == -2);
  CHECK(row.a == -6);
  CHECK(row.p_star == -2);
  CHECK(row.q_star == -3);
  CHECK(row.r_star == -6);
  CHECK_THROWS_AS(build_row(0, ctx, table), std::invalid_argument);
}

TEST_CASE("rows are integral and internally wired for n <= 8") {
  for (long p : {2L, 3L}) {
    QContext ctx(p);
    CycloTable table;
    for (int n = 1; n <= 8; ++n) {
      ApproximantRow row = build_row(n, ctx, table);  // integrality asserted inside
      CHECK(row.beta == row.d * row.pnm_value);
      CHECK(row.b == row.d * row.beta);
      CHECK(row.p_star == row.b);
      CHECK(row.q_star == row.d * row.alpha);
      CHECK(row.r_star == row.a);
      CHECK(sgn(row.residual_bound1) > 0);
      CHECK(sgn(row.residual_bound2) > 0);
    }
  }
}

TEST_CASE("residual enclosures at n = 1, p = 2 against decimal probes") {
  QContext ctx(2);
  CycloTable table;
  ApproximantRow row = build_row(1, ctx, table);
  const long depth = default_depth(1);

  const BigRational probe_tol = make_rational(1, pow_int(BigInt(10), 19));

  // beta_1 zeta_q(1) - alpha_1 = 3 - 2 zeta_q(1) = -0.2133903048305835275666...
  RationalInterval res1 = residual_zeta1(row, zeta_q1(ctx, depth), depth);
  BigRational probe1 = make_rational(BigInt("-2133903048305835275666"),
                                     pow_int(BigInt(10), 22));
  CHECK(abs(res1.midpoint() - probe1) < probe_tol);
  CHECK(!res1.contains_zero());
  CHECK(res1.mag() <= row.residual_bound1);

  // b_1 zeta_q(2) - a_1 = 6 - 2 zeta_q(2) = +0.5119322224810232790395...
  RationalInterval res2 = residual_zeta2(row, zeta_q2(ctx, depth), depth);
  BigRational probe2 = make_rational(BigInt("5119322224810232790395"),
                                     pow_int(BigInt(10), 22));
  CHECK(abs(res2.midpoint() - probe2) < probe_tol);
  CHECK(!res2.contains_zero());
  CHECK(res2.mag() <= row.residual_bound2);
}

TEST_CASE("residual bounds and nonvanishing through n = 8") {
  for (long p : {2L, 3L}) {
    QContext ctx(p);
    CycloTable table;
    for (int n = 1; n <= 8; ++n) {
      const long depth = default_depth(n);
      ApproximantRow row = build_row(n, ctx, table);
      RationalInterval res1 = residual_zeta1(row, zeta_q1(ctx, depth), depth);
      RationalInterval res2 = residual_zeta2(row, zeta_q2(ctx, depth), depth);
      CHECK(res1.mag() <= row.residual_bound1);
      CHECK(res2.mag() <= row.residual_bound2);
      CHECK(!res1.contains_zero());
      CHECK(!res2.contains_zero());
    }
  }
}

TEST_CASE("disjoint residual routes abort instead of passing silently") {
  QContext ctx(2);
  CycloTable table;
  ApproximantRow row = build_row(2, ctx, table);
  const long depth = default_depth(2);
  // feeding a wrong zeta enclosure must trip the intersection guard
  RationalInterval bogus = zeta_q1(ctx, depth) + BigRational(1);
  CHECK_THROWS_AS(residual_zeta1(row, bogus, depth), std::logic_error);
}

TEST_CASE("extralemma identity: hand value and exact sweep") {
  QContext p2(2), p3(3);

  // (1,0), q = 1/2: integral of (1 - 3/2 z) log_q z d_qz = 2 - (3/2)(4/9) = 4/3,
  // closed form q (q;q)_0^2 (q;q)_0 / ((q^2;q)_1 (q;q)_1) = 4/3
  RatPoly f = build_explicit(1, 0, p2).monomial;
  CHECK(integrate_logq_dq(f, p2) == make_rational(4, 3));
  CHECK(extralemma_identity(1, 0, p2));

  CHECK(extralemma_identity(2, 1, p2));
  CHECK(extralemma_identity(5, 3, p3));  // lemma covers all m <= n-1
  for (long p : {2L, 3L}) {
    QContext ctx(p);
    for (int n = 1; n <= 6; ++n)
      for (int m = 0; m <= n - 1; ++m) CHECK(extralemma_identity(n, m, ctx));
  }
  CHECK_THROWS_AS(extralemma_identity(2, 2, p2), std::invalid_argument);
}

TEST_CASE("remainder of the Hermite-Pade approximation matches its series") {
  QContext p2(2);
  CHECK(remainder_integral_check(0, 0, p2, 10));
  CHECK(remainder_integral_check(1, 0, p2, 30));
  CHECK(remainder_integral_check(3, 2, p2, 60));
  QContext p3(3);
  CHECK(remainder_integral_check(2, 1, p3, 40));
}

TEST_CASE("exact partial sums") {
  QContext ctx(2);
  CHECK(harmonic_p(0, ctx) == 0);
  CHECK(harmonic_p(3, ctx) == BigRational(1) + make_rational(1, 3) + make_rational(1, 7));
  CHECK(weighted_harmonic_p(2, ctx) == BigRational(1) + make_rational(2, 3));
}
