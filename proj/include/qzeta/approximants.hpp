#pragma once

#include "qzeta/cyclotomic.hpp"
#include "qzeta/qjacobi.hpp"
#include "qzeta/zeta.hpp"

namespace qzeta {

// Full per-n record for the simultaneous approximants with m = n-1:
//   beta_n  = d_{2n-1}(p) p_{n,n-1}(p^{2n-1})
//   alpha_n = d_{2n-1}(p) [q_{n,n-1}(p^{2n-1}) + p_{n,n-1}(p^{2n-1}) sum_{k<=2n-2} 1/(p^k-1)]
//   b_n     = d_{2n-1}(p)^2 p_{n,n-1}(p^{2n-1})
//   a_n     = d_{2n-1}(p)^2 [r_{n,n-1} + p_{n,n-1} sum k/(p^k-1) + (2n-1) q_{n,n-1}]
//   p* = b_n,  q* = d_{2n-1}(p) alpha_n,  r* = a_n
// Integrality of alpha, a (and the two exact residual bounds) is asserted at
// build time; a nontrivial denominator throws IntegralityViolation.
struct ApproximantRow {
  long p = 2;
  int n = 1;
  BigInt d;               // d_{2n-1}(p)
  BigInt pnm_value;       // p_{n,n-1}(p^{2n-1})
  BigRational qnm_value;  // q_{n,n-1}(p^{2n-1})
  BigRational rnm_value;  // r_{n,n-1}(p^{2n-1})
  BigInt beta, alpha;
  BigInt b, a;
  BigInt p_star, q_star, r_star;
  BigRational residual_bound1;  // exact bound on |beta zeta_q(1) - alpha|
  BigRational residual_bound2;  // exact bound on |b zeta_q(2) - a|
};

// q_{n,m}(p^{n+m}) by the closed quadruple sum with inner factors
// (p^{n+m-k-j};p)_{k-r+j}/(p^r - 1); exact rational.
BigRational q_numerator_at_power(int n, int m, const QContext& ctx);

// r_{n,m}(p^{n+m}) by the closed quintuple sum with inner factors
// (p^{n+m-k-j};p)_{k-r+j}/((p^r - 1)(p^i - 1)); exact rational.
BigRational r_numerator_at_power(int n, int m, const QContext& ctx);

// sum_{k=1}^{limit} 1/(p^k - 1) and sum_{k=1}^{limit} k/(p^k - 1), exact.
BigRational harmonic_p(int limit, const QContext& ctx);
BigRational weighted_harmonic_p(int limit, const QContext& ctx);

ApproximantRow build_row(int n, const QContext& ctx, CycloTable& table);

// Enclosures of the Markov remainder integrals at z = p^M:
//   int_0^1 f(x)/(z-x) d_qx          = sum_k q^k f(q^k)/(z - q^k)
//   int_0^1 f(x)/(z-x) log_q x d_qx  = sum_k k q^k f(q^k)/(z - q^k)
// truncated at `depth` terms with proven tail bounds.
RationalInterval markov_remainder_mu1(const QJacobiPoly& f, int M, long depth);
RationalInterval markov_remainder_mu2(const QJacobiPoly& f, int M, long depth);

// Enclosure of beta_n zeta_q(1) - alpha_n. Two independent routes (interval
// arithmetic on the zeta enclosure, and d_{2n-1}(p) times the remainder
// integral) are intersected; disjoint routes throw std::logic_error.
RationalInterval residual_zeta1(const ApproximantRow& row, const RationalInterval& zeta1,
                                long depth);

// Enclosure of b_n zeta_q(2) - a_n; independent route is
// d^2 [ mu2-remainder + (2n-1) mu1-remainder ].
RationalInterval residual_zeta2(const ApproximantRow& row, const RationalInterval& zeta2,
                                long depth);

// Exact rational identity, for m <= n-1:
//   int_0^1 z^m p_{n,m}(z) log_q z d_qz
//     = q^{n(m+1)} (q;q)_m^2 (q;q)_{n-m-1} / ((q^{n+m+1};q)_{m+1} (q;q)_n)
bool extralemma_identity(int n, int m, const QContext& ctx);

// Consistency of p_{n,m}(z) f1(z) - q_{n,m}(z) at z = p^{n+m} against the
// truncated remainder series, both as enclosures. Vacuous for n = m = 0.
bool remainder_integral_check(int n, int m, const QContext& ctx, long depth);

}  // namespace qzeta
