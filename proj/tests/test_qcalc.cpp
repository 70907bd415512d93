#include <doctest.h>

#include <random>
#include <thread>

#include "qzeta/qcalc.hpp"
#include "support/oracles.hpp"

using namespace qzeta;

TEST_CASE("qpochhammer basics") {
  BigRational half = make_rational(1, 2);
  CHECK(qpochhammer(half, half, 0) == 1);
  CHECK(qpochhammer(half, half, 2) == make_rational(3, 8));
  CHECK(qpochhammer(half, half, 3) == make_rational(21, 64));  // (q;q)_3 at q=1/2
  CHECK_THROWS_AS(qpochhammer(half, half, -1), std::invalid_argument);
}

TEST_CASE("gauss binomial: boundaries, products, Pascal identities") {
  CHECK(gauss_binomial(7, 0, BigRational(2)) == 1);
  CHECK(gauss_binomial(7, 7, BigRational(2)) == 1);
  CHECK(gauss_binomial(4, -1, BigRational(2)) == 0);
  CHECK(gauss_binomial(4, 5, BigRational(2)) == 0);
  CHECK(gauss_binomial(4, 2, BigRational(2)) == 35);
  CHECK_THROWS_AS(gauss_binomial(3, 1, BigRational(0)), std::invalid_argument);

  // product-formula oracle and integer-base variant
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      for (long base : {2L, 3L}) {
        BigRational expected = oracles::binomial_product(n, k, BigRational(base));
        CHECK(gauss_binomial(n, k, BigRational(base)) == expected);
        CHECK(BigRational(gauss_binomial_int(n, k, BigInt(base))) == expected);
      }
      BigRational qh = make_rational(1, 2);
      CHECK(gauss_binomial(n, k, qh) == oracles::binomial_product(n, k, qh));
    }

  // both Pascal forms
  for (const BigRational& base : {BigRational(2), make_rational(1, 2), BigRational(3)})
    for (int n = 1; n <= 10; ++n)
      for (int k = 0; k <= n; ++k) {
        BigRational lhs = gauss_binomial(n, k, base);
        CHECK(lhs == gauss_binomial(n - 1, k - 1, base) +
                         pow_rational(base, k) * gauss_binomial(n - 1, k, base));
        CHECK(lhs == gauss_binomial(n - 1, k, base) +
                         pow_rational(base, n - k) * gauss_binomial(n - 1, k - 1, base));
      }

  // equality with the q-Pochhammer quotient (q;q)_n / ((q;q)_k (q;q)_{n-k})
  for (long p : {2L, 3L}) {
    BigRational base(p);
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= n; ++k) {
        BigRational quotient = qpochhammer(base, base, n) /
                               (qpochhammer(base, base, k) * qpochhammer(base, base, n - k));
        CHECK(gauss_binomial(n, k, base) == quotient);
      }
  }
}

TEST_CASE("gauss_binomial_poly matches integer evaluations") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      IntPoly b = gauss_binomial_poly(n, k);
      CHECK(b(BigInt(2)) == gauss_binomial_int(n, k, BigInt(2)));
      CHECK(b(BigInt(1)) > 0);  // ordinary binomial coefficient
    }
}

TEST_CASE("q_derivative: definition and the two power identities") {
  QContext ctx(2);
  const BigRational q = ctx.q;
  const BigRational p(2);

  CHECK(q_derivative(RatPoly(BigRational(7)), q).is_zero());
  CHECK_THROWS_AS(q_derivative(RatPoly::x(), BigRational(1)), std::invalid_argument);

  // D_q^r x^s = (q;q)_s x^{s-r} / ((1-q)^r (q;q)_{s-r})  at s=4, r=2
  RatPoly f = RatPoly::monomial(4, BigRational(1));
  RatPoly d2 = q_derivative(q_derivative(f, q), q);
  BigRational expected = qpochhammer(q, q, 4) /
                         (pow_rational(BigRational(1) - q, 2) * qpochhammer(q, q, 2));
  CHECK(d2 == RatPoly::monomial(2, expected));

  // D_p^k (qx;q)_n = (q;q)_n / ((q;q)_{n-k} (1-p)^k) (qx;q)_{n-k}  at n=3, k=1
  std::vector<RatPoly> basis = poch_basis(ctx, 3);
  RatPoly lhs = q_derivative(basis[3], p);
  BigRational factor = qpochhammer(q, q, 3) /
                       (qpochhammer(q, q, 2) * (BigRational(1) - p));
  CHECK(lhs == basis[2].scaled(factor));

  // and for a second order: n=4, k=2, p=3
  QContext ctx3(3);
  std::vector<RatPoly> basis3 = poch_basis(ctx3, 4);
  RatPoly lhs2 = q_derivative(q_derivative(basis3[4], BigRational(3)), BigRational(3));
  BigRational f2 = qpochhammer(ctx3.q, ctx3.q, 4) /
                   (qpochhammer(ctx3.q, ctx3.q, 2) *
                    pow_rational(BigRational(1) - BigRational(3), 2));
  CHECK(lhs2 == basis3[2].scaled(f2));
}

TEST_CASE("moments: closed forms against series oracles") {
  QContext p2(2), p3(3);

  CHECK(power_moment(0, p2) == 2);
  CHECK(power_moment(1, p2) == make_rational(4, 3));
  CHECK(power_moment(2, p3) == make_rational(27, 26));

  CHECK(log_moment(0, p2) == 2);
  CHECK(log_moment(1, p2) == make_rational(4, 9));
  CHECK(log_moment(0, p3) == make_rational(3, 4));

  CHECK(modified_moment(1, p2) == 2);
  CHECK(modified_moment(2, p2) == make_rational(4, 3));
  CHECK(modified_moment(3, p3) == make_rational(27, 26));

  CHECK(log_modified_moment(1, p2) == 2);
  CHECK(log_modified_moment(1, p2) == log_moment(0, p2));
  CHECK(log_modified_moment(2, p2) == make_rational(16, 9));
  CHECK(log_modified_moment(2, p3) == make_rational(45, 64));

  // truncated-sum oracles with tail bounds
  for (const QContext* ctx : {&p2, &p3}) {
    for (int r = 1; r <= 5; ++r) {
      const int L = 40;
      BigRational partial = oracles::truncated_modified_moment(r, *ctx, L);
      BigRational closed = modified_moment(r, *ctx);
      CHECK(closed >= partial);
      CHECK(closed <= partial + oracles::modified_moment_tail_bound(*ctx, L));

      BigRational lpartial = oracles::truncated_log_modified_moment(r, *ctx, L);
      BigRational lclosed = log_modified_moment(r, *ctx);
      CHECK(lclosed >= lpartial);
      CHECK(lclosed <= lpartial + oracles::log_modified_moment_tail_bound(*ctx, L));
    }
  }
}

TEST_CASE("q-Newton binomial expansions and their inverse") {
  for (long p : {2L, 3L}) {
    BigRational q = make_rational(1, p);
    for (int n = 0; n <= 8; ++n)
      CHECK(oracles::poch_poly_product(n, q) == oracles::poch_poly_qbinomial(n, q));

    // composing expansion and inverse is the identity on polynomials
    std::mt19937 rng(1234 + p);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<BigRational> c;
      for (int i = 0; i <= 8; ++i) c.emplace_back(coeff(rng));
      RatPoly f(c);
      RatPoly back = oracles::from_poch_basis(oracles::to_poch_basis(f, q), q);
      CHECK(back == f);
    }
  }
}

TEST_CASE("summation by parts on the q-lattice") {
  // sum q^k f(q^k) (D_{q^{-1}} g)(q^k) = -q sum q^k g(q^k) (D_q f)(q^k)
  // for g with g(q^{-1}) = 0 = g(0) f(0); both sides as exact q-integrals.
  // Every use in the construction has an x^n factor in g, so g(0) = 0 there.
  // When g(0) f(0) != 0 the telescoping leaves the boundary term
  // -q g(0) f(0)/(1-q) on the right, which is pinned too.
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (long p : {2L, 3L}) {
    QContext ctx(p);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<BigRational> fc, hc;
      for (int i = 0; i <= 3; ++i) fc.emplace_back(coeff(rng));
      for (int i = 0; i <= 2; ++i) hc.emplace_back(coeff(rng));
      RatPoly f(fc), h(hc);
      // g(x) = x (x - q^{-1}) h(x) vanishes at q^{-1} and at 0
      RatPoly vanishing =
          RatPoly(std::vector<BigRational>{-ctx.qpow(-1), BigRational(1)}).shifted_up(1);
      RatPoly g = vanishing * h;

      BigRational lhs = integrate_dq(f * q_derivative(g, BigRational(p)), ctx);
      BigRational rhs = -ctx.q * integrate_dq(g * q_derivative(f, ctx.q), ctx);
      CHECK(lhs == rhs);

      // general g: boundary term appears
      RatPoly g2 = RatPoly(std::vector<BigRational>{-ctx.qpow(-1), BigRational(1)}) * h;
      BigRational lhs2 = integrate_dq(f * q_derivative(g2, BigRational(p)), ctx);
      BigRational rhs2 = -ctx.q * integrate_dq(g2 * q_derivative(f, ctx.q), ctx);
      BigRational boundary = -ctx.q * g2.coeff(0) * f.coeff(0) / (BigRational(1) - ctx.q);
      CHECK(lhs2 == rhs2 + boundary);
    }
  }
}

TEST_CASE("q-binomial series at lattice points") {
  for (long p : {2L, 3L}) {
    QContext ctx(p);
    const BigRational q = ctx.q;

    // terminating case: a = q^{-N} makes the series a finite sum equal to
    // (q^{t-N};q)_N
    for (int N = 1; N <= 4; ++N)
      for (int t = N + 1; t <= N + 2; ++t) {
        BigRational sum(0);
        for (int n = 0; n <= N; ++n)
          sum += qpochhammer(ctx.qpow(-N), q, n) / qpochhammer(q, q, n) * ctx.qpow(t * n);
        CHECK(sum == qpochhammer(ctx.qpow(t - N), q, N));
      }

    // nonterminating: partial sums converge into the closed form 1/(q^t;q)_s.
    // Term ratio is (1-q^{s+n})/(1-q^{n+1}) q^t <= q^t/(1-q^{K+1}) =: rho < 1
    // past n = K, so the tail is below term_K * rho/(1-rho).
    for (int s : {1, 2, 3})
      for (int t : {1, 2}) {
        const int K = 30;
        BigRational partial(0), term(0);
        for (int n = 0; n <= K; ++n) {
          term = qpochhammer(ctx.qpow(s), q, n) / qpochhammer(q, q, n) * ctx.qpow(t * n);
          partial += term;
        }
        BigRational closed = BigRational(1) / qpochhammer(ctx.qpow(t), q, s);
        BigRational rho = ctx.qpow(t) / (BigRational(1) - ctx.qpow(K + 1));
        REQUIRE(rho < 1);
        BigRational tail = term * rho / (BigRational(1) - rho);
        CHECK(closed >= partial);
        CHECK(closed <= partial + tail);
      }
  }
}

TEST_CASE("operations are pure") {
  QContext ctx(2);
  CHECK(power_moment(3, ctx) == power_moment(3, ctx));
  CHECK(gauss_binomial(9, 4, make_rational(1, 3)) == gauss_binomial(9, 4, make_rational(1, 3)));
}

TEST_CASE("concurrent workers agree (per-thread memo tables)") {
  std::vector<std::vector<BigRational>> results(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([t, &results] {
      QContext ctx(2 + t % 2);
      for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
          results[static_cast<size_t>(t)].push_back(
              gauss_binomial(n, k, ctx.q) * power_moment(n, ctx) +
              BigRational(gauss_binomial_int(n, k, BigInt(ctx.p))));
    });
  for (auto& w : workers) w.join();
  CHECK(results[0] == results[2]);
  CHECK(results[1] == results[3]);
  CHECK(results[0] != results[1]);
}
