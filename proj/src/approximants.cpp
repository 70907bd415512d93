#include "qzeta/approximants.hpp"

namespace qzeta {

namespace {

// Shared outer structure of the evaluated numerator sums: for each (k, j) the
// integer weight
//   (-1)^{n+m+1} (-1)^{k+j} [n+m+k m]_p [n+k+j n]_p [m k]_p [n j]_p
//     p^{(n-j)(n-j+1)/2} p^{(m-k)(m-k+1)/2}
// multiplies an inner sum over r built from the prefix products
//   prefix[L] = prod_{i=0}^{L-1} (1 - p^{n+m-k-j+i}).
template <class InnerFn>
BigRational evaluated_numerator_sum(int n, int m, const QContext& ctx, InnerFn&& inner) {
  if (n < 0 || m < 0 || m > n)
    throw std::invalid_argument("numerator evaluation requires 0 <= m <= n");
  const BigInt p(ctx.p);
  const int outer_sign = ((n + m + 1) % 2 == 0) ? 1 : -1;

  BigRational total(0);
  for (int k = 0; k <= m; ++k) {
    for (int j = 0; j <= n; ++j) {
      if (k + j == 0) continue;  // empty inner sum
      BigInt c = gauss_binomial_int(n + m + k, m, p);
      c *= gauss_binomial_int(n + k + j, n, p);
      c *= gauss_binomial_int(m, k, p);
      c *= gauss_binomial_int(n, j, p);
      c *= pow_int(p, static_cast<unsigned long>(n - j) * (n - j + 1) / 2);
      c *= pow_int(p, static_cast<unsigned long>(m - k) * (m - k + 1) / 2);
      if ((outer_sign < 0) != ((k + j) % 2 == 1)) c = -c;

      // prefix[L] = (p^{n+m-k-j};p)_L
      std::vector<BigInt> prefix(static_cast<size_t>(k + j));
      prefix[0] = 1;
      for (int l = 1; l < k + j; ++l)
        prefix[static_cast<size_t>(l)] =
            prefix[static_cast<size_t>(l - 1)] *
            (BigInt(1) - pow_int(p, static_cast<unsigned long>(n + m - k - j + l - 1)));

      BigRational inner_sum(0);
      for (int r = 1; r <= k + j; ++r)
        inner_sum += inner(r, prefix[static_cast<size_t>(k + j - r)]);
      total += BigRational(c) * inner_sum;
    }
  }
  return total;
}

}  // namespace

BigRational q_numerator_at_power(int n, int m, const QContext& ctx) {
  const BigInt p(ctx.p);
  return evaluated_numerator_sum(n, m, ctx, [&](int r, const BigInt& poch) {
    return make_rational(poch, pow_int(p, static_cast<unsigned long>(r)) - 1);
  });
}

BigRational r_numerator_at_power(int n, int m, const QContext& ctx) {
  const BigInt p(ctx.p);
  std::vector<BigRational> harmonic{BigRational(0)};  // harmonic[r] = sum_{i<=r} 1/(p^i-1)
  return evaluated_numerator_sum(n, m, ctx, [&](int r, const BigInt& poch) -> BigRational {
    while (static_cast<int>(harmonic.size()) <= r) {
      BigInt pk = pow_int(p, harmonic.size());
      harmonic.push_back(harmonic.back() + make_rational(1, pk - 1));
    }
    return make_rational(poch, pow_int(p, static_cast<unsigned long>(r)) - 1) *
           harmonic[static_cast<size_t>(r)];
  });
}

BigRational harmonic_p(int limit, const QContext& ctx) {
  BigRational sum(0);
  for (int k = 1; k <= limit; ++k)
    sum += make_rational(1, ctx.ppow(static_cast<unsigned long>(k)) - 1);
  return sum;
}

BigRational weighted_harmonic_p(int limit, const QContext& ctx) {
  BigRational sum(0);
  for (int k = 1; k <= limit; ++k)
    sum += make_rational(k, ctx.ppow(static_cast<unsigned long>(k)) - 1);
  return sum;
}

namespace {

BigRational residual_bound_zeta1(int n, const QContext& ctx, const BigInt& d) {
  // d * q^{n(n-1)/2} q^{(n-1)(n-2)/2} q^{2n-1}
  //   / ( p^{(2n-1)(n+1)} (q;q)_{n-1} (q^{2n-1};q)_{2n+1}^2 (1 - q^{2n}) )
  const BigRational& q = ctx.q;
  BigRational bound(d);
  bound *= ctx.qpow(static_cast<long>(n) * (n - 1) / 2 +
                    static_cast<long>(n - 1) * (n - 2) / 2 + (2L * n - 1));
  bound /= BigRational(ctx.ppow(static_cast<unsigned long>(2 * n - 1) *
                                static_cast<unsigned long>(n + 1)));
  bound /= qpochhammer(q, q, n - 1);
  BigRational tail_poch = qpochhammer(ctx.qpow(2 * n - 1), q, 2 * n + 1);
  bound /= tail_poch * tail_poch;
  bound /= BigRational(1) - ctx.qpow(2 * n);
  return bound;
}

BigRational residual_bound_zeta2(int n, const QContext& ctx, const BigInt& d) {
  // d^2 * q^{(2n-1)n} q^{n^2} (q;q)_{n-1}^2 / ( (q^{2n};q)_n (q;q)_n )
  const BigRational& q = ctx.q;
  BigRational bound(d * d);
  bound *= ctx.qpow(static_cast<long>(2 * n - 1) * n + static_cast<long>(n) * n);
  BigRational head_poch = qpochhammer(q, q, n - 1);
  bound *= head_poch * head_poch;
  bound /= qpochhammer(ctx.qpow(2 * n), q, n);
  bound /= qpochhammer(q, q, n);
  return bound;
}

}  // namespace

ApproximantRow build_row(int n, const QContext& ctx, CycloTable& table) {
  if (n < 1) throw std::invalid_argument("build_row: n must be >= 1");
  const int m = n - 1;
  const int N = 2 * n - 1;

  QJacobiPoly poly = build_pochhammer(n, m, ctx);

  ApproximantRow row;
  row.p = ctx.p;
  row.n = n;
  row.d = table.d_eval(N, ctx.p);
  row.pnm_value = eval_at_power(poly, N);
  row.qnm_value = q_numerator_at_power(n, m, ctx);
  row.rnm_value = r_numerator_at_power(n, m, ctx);

  const BigRational s1 = harmonic_p(2 * n - 2, ctx);
  const BigRational s2 = weighted_harmonic_p(2 * n - 2, ctx);
  const BigRational d_rat(row.d);
  const BigRational d2_rat(row.d * row.d);
  const BigRational pnm_rat(row.pnm_value);

  row.beta = row.d * row.pnm_value;
  row.alpha = to_integer(d_rat * (row.qnm_value + pnm_rat * s1), "alpha_n");
  row.b = row.d * row.beta;
  row.a = to_integer(
      d2_rat * (row.rnm_value + pnm_rat * s2 + BigRational(2 * n - 1) * row.qnm_value),
      "a_n");
  row.p_star = row.b;
  row.q_star = row.d * row.alpha;
  row.r_star = row.a;

  row.residual_bound1 = residual_bound_zeta1(n, ctx, row.d);
  row.residual_bound2 = residual_bound_zeta2(n, ctx, row.d);
  return row;
}

namespace {

constexpr long kExactRemainderLimit = 80;

// Accumulate term(k), k = 0..depth-1, with directed dyadic rounding beyond
// the exact regime, then pad by the tail enclosure [-tail, +tail].
template <class TermFn>
RationalInterval enclose_remainder(long p, long depth, const BigRational& tail,
                                   TermFn&& term) {
  BigRational lo, hi;
  if (depth <= kExactRemainderLimit) {
    BigRational sum(0);
    for (long k = 0; k < depth; ++k) sum += term(k);
    lo = sum;
    hi = sum;
  } else {
    const unsigned long prec =
        static_cast<unsigned long>(depth) * mpz_sizeinbase(BigInt(p).get_mpz_t(), 2) + 96;
    BigInt acc_lo(0), acc_hi(0), t;
    for (long k = 0; k < depth; ++k) {
      BigRational x = term(k);
      BigInt scaled = x.get_num() << prec;
      mpz_fdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
      acc_lo += t;
      mpz_cdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
      acc_hi += t;
    }
    BigInt unit = BigInt(1) << prec;
    lo = make_rational(std::move(acc_lo), unit);
    hi = make_rational(std::move(acc_hi), std::move(unit));
  }
  return RationalInterval(lo - tail, hi + tail);
}

}  // namespace

RationalInterval markov_remainder_mu1(const QJacobiPoly& f, int M, long depth) {
  if (M < 1) throw std::invalid_argument("markov_remainder_mu1: M must be >= 1");
  if (depth < 1) throw std::invalid_argument("markov_remainder_mu1: depth must be >= 1");
  const QContext ctx = f.ctx();
  const BigInt p(ctx.p);
  const BigInt pM = pow_int(p, static_cast<unsigned long>(M));

  // |sum_{k>=K} q^k f(q^k)/(z-q^k)| <= A q^K / ((z-1)(1-q)),  A = sum|c_i|
  BigRational tail = sum_abs_coeffs(f) * BigRational(p);
  tail /= BigRational(pow_int(p, static_cast<unsigned long>(depth)) * (p - 1) * (pM - 1));

  // q^k/(z - q^k) = 1/(p^{M+k} - 1)
  return enclose_remainder(ctx.p, depth, tail, [&](long k) -> BigRational {
    BigRational fval = f.monomial(make_rational(1, pow_int(p, static_cast<unsigned long>(k))));
    return fval / BigRational(pow_int(p, static_cast<unsigned long>(M + k)) - 1);
  });
}

RationalInterval markov_remainder_mu2(const QJacobiPoly& f, int M, long depth) {
  if (M < 1) throw std::invalid_argument("markov_remainder_mu2: M must be >= 1");
  if (depth < 1) throw std::invalid_argument("markov_remainder_mu2: depth must be >= 1");
  const QContext ctx = f.ctx();
  const BigInt p(ctx.p);
  const BigInt pM = pow_int(p, static_cast<unsigned long>(M));

  // |sum_{k>=K} k q^k f(q^k)/(z-q^k)| <= A q^{K-1} (K(p-1)+1) / ((z-1)(p-1)^2)
  BigRational tail = sum_abs_coeffs(f) * BigRational(p * (BigInt(depth) * (p - 1) + 1));
  tail /= BigRational(pow_int(p, static_cast<unsigned long>(depth)) * (p - 1) * (p - 1) *
                      (pM - 1));

  return enclose_remainder(ctx.p, depth, tail, [&](long k) -> BigRational {
    BigRational fval = f.monomial(make_rational(1, pow_int(p, static_cast<unsigned long>(k))));
    return BigRational(k) * fval /
           BigRational(pow_int(p, static_cast<unsigned long>(M + k)) - 1);
  });
}

RationalInterval residual_zeta1(const ApproximantRow& row, const RationalInterval& zeta1,
                                long depth) {
  const QContext ctx(row.p);
  RationalInterval direct = zeta1.scaled(BigRational(row.beta)) - BigRational(row.alpha);

  QJacobiPoly poly = build_pochhammer(row.n, row.n - 1, ctx);
  RationalInterval via_integral =
      markov_remainder_mu1(poly, 2 * row.n - 1, depth).scaled(BigRational(row.d));

  return intersect(direct, via_integral, "zeta_q(1) residual routes");
}

RationalInterval residual_zeta2(const ApproximantRow& row, const RationalInterval& zeta2,
                                long depth) {
  const QContext ctx(row.p);
  RationalInterval direct = zeta2.scaled(BigRational(row.b)) - BigRational(row.a);

  QJacobiPoly poly = build_pochhammer(row.n, row.n - 1, ctx);
  const int M = 2 * row.n - 1;
  RationalInterval mu1 = markov_remainder_mu1(poly, M, depth);
  RationalInterval mu2 = markov_remainder_mu2(poly, M, depth);
  RationalInterval via_integral =
      (mu2 + mu1.scaled(BigRational(M))).scaled(BigRational(row.d * row.d));

  return intersect(direct, via_integral, "zeta_q(2) residual routes");
}

bool extralemma_identity(int n, int m, const QContext& ctx) {
  if (n < 1 || m < 0 || m > n - 1)
    throw std::invalid_argument("extralemma_identity: requires 0 <= m <= n-1");
  const BigRational& q = ctx.q;

  QJacobiPoly poly = build_explicit(n, m, ctx);
  BigRational lhs = integrate_logq_dq(poly.monomial.shifted_up(m), ctx);

  BigRational qq_m = qpochhammer(q, q, m);
  BigRational rhs = ctx.qpow(static_cast<long>(n) * (m + 1)) * qq_m * qq_m *
                    qpochhammer(q, q, n - m - 1);
  rhs /= qpochhammer(ctx.qpow(n + m + 1), q, m + 1) * qpochhammer(q, q, n);
  return lhs == rhs;
}

bool remainder_integral_check(int n, int m, const QContext& ctx, long depth) {
  if (m > n || n < 0 || m < 0)
    throw std::invalid_argument("remainder_integral_check: requires 0 <= m <= n");
  if (depth < 1) throw std::invalid_argument("remainder_integral_check: depth must be >= 1");
  if (n + m == 0) return true;  // z = 1: both sides are the same defining series

  QJacobiPoly poly = build_pochhammer(n, m, ctx);
  BigInt pv = eval_at_power(poly, n + m);
  BigRational qv = q_numerator_at_power(n, m, ctx);

  RationalInterval lhs =
      f1_at_power(ctx, n + m, depth).scaled(BigRational(pv)) - qv;
  RationalInterval rhs = markov_remainder_mu1(poly, n + m, depth);
  return lhs.intersects(rhs);
}

}  // namespace qzeta
