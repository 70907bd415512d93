#pragma once

// Independent oracles for the test suites. Everything here recomputes
// expected values by a different route than the library (direct products,
// truncated series with explicit tail bounds, divided differences through
// moments, alternating arctangent series), so agreement is meaningful.

#include "qzeta/interval.hpp"
#include "qzeta/qcalc.hpp"

namespace qzeta::oracles {

// [n k]_base by the product formula prod_{i=1}^{k} (base^{n-k+i}-1)/(base^i-1).
BigRational binomial_product(int n, int k, const BigRational& base);

// Partial sum of sum_l q^l (q^{l+1};q)_{r-1}; terms are in (0, q^l], so the
// closed form must lie in [partial, partial + q^L/(1-q)].
BigRational truncated_modified_moment(int r, const QContext& ctx, int terms);
BigRational modified_moment_tail_bound(const QContext& ctx, int terms);

// Partial sum of sum_l l q^l (q^{l+1};q)_{r-1}; tail bounded by
// sum_{l>=L} l q^l = q^L (L(1-q)+q)/(1-q)^2.
BigRational truncated_log_modified_moment(int r, const QContext& ctx, int terms);
BigRational log_modified_moment_tail_bound(const QContext& ctx, int terms);

// The defining divided-difference sums for the Hermite-Pade numerators,
// integrated term by term with closed-form moments:
//   sum_l w_l (f(z) - f(q^l)) / (z - q^l)
// with weights q^l (power moments) and l q^l (log moments).
BigRational divided_difference_mu1(const RatPoly& f, const BigRational& z,
                                   const QContext& ctx);
BigRational divided_difference_mu2(const RatPoly& f, const BigRational& z,
                                   const QContext& ctx);

// (x;q)_n expanded as a polynomial, (a) by the direct product and (b) by the
// q-binomial theorem  sum_k [n k]_q q^{k(k-1)/2} (-x)^k.
RatPoly poch_poly_product(int n, const BigRational& q);
RatPoly poch_poly_qbinomial(int n, const BigRational& q);

// Coefficients of f in the basis {(x;q)_k} via the inverse expansion
//   x^n = sum_k [n k]_q (-1)^k q^{-nk + k(k+1)/2} (x;q)_k,
// and the reverse conversion back to monomials.
std::vector<BigRational> to_poch_basis(const RatPoly& f, const BigRational& q);
RatPoly from_poch_basis(const std::vector<BigRational>& coeffs, const BigRational& q);

// pi^2 from the Machin formula pi/4 = 4 atan(1/5) - atan(1/239) with
// alternating-series bracketing (fast), and from 6 sum 1/k^2 with the
// integral tail bracket (slow but elementary).
RationalInterval pi_squared_machin(int terms);
RationalInterval pi_squared_series(int terms);

}  // namespace qzeta::oracles
