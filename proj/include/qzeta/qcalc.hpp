#pragma once

#include <vector>

#include "qzeta/arith.hpp"
#include "qzeta/polynomial.hpp"

namespace qzeta {

// q = 1/p exactly, for an integer p >= 2. All q-lattice operations below are
// pure; results depend only on the arguments.
struct QContext {
  long p;
  BigRational q;

  explicit QContext(long p_) : p(p_), q(make_rational(1, p_)) {
    if (p_ < 2) throw std::invalid_argument("QContext: p must be an integer >= 2");
  }

  // q^e, e may be negative
  BigRational qpow(long e) const { return pow_rational(q, e); }
  BigInt ppow(unsigned long e) const { return pow_int(BigInt(p), e); }
};

// (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k); empty product = 1.
BigRational qpochhammer(const BigRational& a, const BigRational& q, int n);

// Gaussian binomial [n k]_base via the Pascal recurrence
//   [n k]_b = [n-1 k-1]_b + b^k [n-1 k]_b,
// which never divides, so integer bases yield integers. 0 for k < 0 or k > n.
// Rows are memoized per base in a thread-local table.
BigRational gauss_binomial(int n, int k, const BigRational& base);
BigInt gauss_binomial_int(int n, int k, const BigInt& base);

// [n k]_x as a polynomial in x with integer coefficients (same recurrence).
IntPoly gauss_binomial_poly(int n, int k);

// D_r f with (D_r f)(x) = (f(x) - f(rx)) / ((1-r)x); well defined on
// polynomials. Requires r != 0, 1.  D_q and D_{q^{-1}} = D_p are the two
// instances in use.
RatPoly q_derivative(const RatPoly& f, const BigRational& r);

// int_0^1 x^s d_qx = sum_k q^{k(s+1)} = p^{s+1}/(p^{s+1}-1)
BigRational power_moment(int s, const QContext& ctx);

// int_0^1 x^s log_q(x) d_qx = sum_k k q^{k(s+1)} = p^{s+1}/(p^{s+1}-1)^2
BigRational log_moment(int s, const QContext& ctx);

// sum_{l>=0} q^l (q^{l+1};q)_{r-1} = 1/(1-q^r) = p^r/(p^r-1), r >= 1
BigRational modified_moment(int r, const QContext& ctx);

// sum_{l>=0} l q^l (q^{l+1};q)_{r-1} = 1/(1-q^r) * sum_{i=1}^r 1/(p^i-1)
BigRational log_modified_moment(int r, const QContext& ctx);

// Exact q-integrals of a polynomial against d_qx and log_q(x) d_qx.
BigRational integrate_dq(const RatPoly& f, const QContext& ctx);
BigRational integrate_logq_dq(const RatPoly& f, const QContext& ctx);

// (qx;q)_l for l = 0..max_len as polynomials in x.
std::vector<RatPoly> poch_basis(const QContext& ctx, int max_len);

}  // namespace qzeta
