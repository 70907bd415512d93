#pragma once

#include <vector>

#include "qzeta/qcalc.hpp"

namespace qzeta {

// One term of the (qx;q)_{k+j} basis expansion.
struct PochTerm {
  int k;
  int j;
  BigInt coeff;
};

// Multiple little q-Jacobi polynomial p_{n,m} (all parameters zero), with the
// normalization p_{n,m}(0) = 1. It is the degree-(n+m) polynomial with
//   int_0^1 p_{n,m}(x) x^l d_qx = 0            for l < n,
//   int_0^1 p_{n,m}(x) x^l log_q(x) d_qx = 0   for l < m.
// Immutable after build; builds for different (n, m, p) are independent.
struct QJacobiPoly {
  int n = 0;
  int m = 0;
  long p = 2;
  RatPoly monomial;             // degree n+m, monomial(0) == 1
  std::vector<PochTerm> poch;   // filled only by the (qx;q)-basis route

  QContext ctx() const { return QContext(p); }
};

// Explicit double sum over the monomial basis:
//   sum_{k<=m} sum_{j<=n} (qx)^{k+j}/((q;q)_k (q;q)_j) * q^{-kn}
//     * (q^{n+1};q)_{j+k}/(q;q)_{j+k} * (q^{n+m+1};q)_k/(q;q)_k
//     * (q^{-n};q)_j (q^{-m};q)_k
QJacobiPoly build_explicit(int n, int m, const QContext& ctx);

// Same polynomial in the (qx;q)_{k+j} basis with integer coefficients
//   (-1)^{n+m} (-1)^{k+j} [n+m+k m]_p [n+k+j n]_p [m k]_p [n j]_p
//     * p^{(n-j)(n-j+1)/2} p^{(m-k)(m-k+1)/2}
QJacobiPoly build_pochhammer(int n, int m, const QContext& ctx);

// Rodrigues operator route, purely polynomial:
//   (-1)^{n+m} q^{n(n-1)/2} q^{m(m-1)/2} (q-1)^{n+m} / ((q;q)_n (q;q)_m)
//     * D_{q^{-1}}^n [ x^n D_{q^{-1}}^m ( (qx;q)_{n+m} x^m ) ]
QJacobiPoly build_rodrigues(int n, int m, const QContext& ctx);

// All n + m orthogonality conditions, checked as exact rational zeros.
bool verify_orthogonality(const QJacobiPoly& poly);

// Leading coefficient kappa_{n,m}; computed from
//   (-1)^{n+m} [2n+m n]_q [n+2m m]_q p^{(n+m)(n+m-1)/2}
// and cross-checked against the equivalent Pochhammer-quotient form (the two
// must agree; disagreement is an internal error).
BigRational leading_coefficient(int n, int m, const QContext& ctx);

// Exact count of distinct roots in the open interval (0,1), by a Sturm chain
// over exact rationals with content stripping. Throws if gcd(f, f') is
// nonconstant ("not squarefree") or if an endpoint is a root; either would
// contradict the theory and means a bug.
int count_roots_in_unit_interval(const QJacobiPoly& poly);

// p_{n,m}(p^N) for N = n+m, evaluated in the (qx;q) basis where every factor
//   (q p^N;q)_{k+j} = prod_{i=1}^{k+j} (1 - p^{N-i})
// is an integer; cross-checked against the monomial form. Integer result.
BigInt eval_at_power(const QJacobiPoly& poly, int N);

// sum_i |c_i| over the monomial coefficients (used in series tail bounds).
BigRational sum_abs_coeffs(const QJacobiPoly& poly);

}  // namespace qzeta
