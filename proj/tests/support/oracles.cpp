#include "oracles.hpp"

namespace qzeta::oracles {

BigRational binomial_product(int n, int k, const BigRational& base) {
  if (k < 0 || k > n) return BigRational(0);
  BigRational num(1), den(1);
  for (int i = 1; i <= k; ++i) {
    num *= pow_rational(base, n - k + i) - 1;
    den *= pow_rational(base, i) - 1;
  }
  return num / den;
}

BigRational truncated_modified_moment(int r, const QContext& ctx, int terms) {
  BigRational sum(0);
  for (int l = 0; l < terms; ++l)
    sum += ctx.qpow(l) * qpochhammer(ctx.qpow(l + 1), ctx.q, r - 1);
  return sum;
}

BigRational modified_moment_tail_bound(const QContext& ctx, int terms) {
  return ctx.qpow(terms) / (BigRational(1) - ctx.q);
}

BigRational truncated_log_modified_moment(int r, const QContext& ctx, int terms) {
  BigRational sum(0);
  for (int l = 0; l < terms; ++l)
    sum += BigRational(l) * ctx.qpow(l) * qpochhammer(ctx.qpow(l + 1), ctx.q, r - 1);
  return sum;
}

BigRational log_modified_moment_tail_bound(const QContext& ctx, int terms) {
  BigRational one_minus_q = BigRational(1) - ctx.q;
  return ctx.qpow(terms) * (BigRational(terms) * one_minus_q + ctx.q) /
         (one_minus_q * one_minus_q);
}

namespace {

// (f(z) - f(x))/(z - x) = sum_s c_s sum_{u+v=s-1} z^u x^v, so integrating the
// x-variable against a moment sequence mu gives
// sum_s c_s sum_{u=0}^{s-1} z^u mu(s-1-u).
template <class MomentFn>
BigRational divided_difference(const RatPoly& f, const BigRational& z, MomentFn&& mu) {
  BigRational total(0);
  for (int s = 1; s <= f.degree(); ++s) {
    if (f.coeff(s) == 0) continue;
    BigRational zu(1);
    BigRational inner(0);
    for (int u = 0; u <= s - 1; ++u) {
      inner += zu * mu(s - 1 - u);
      zu *= z;
    }
    total += f.coeff(s) * inner;
  }
  return total;
}

}  // namespace

BigRational divided_difference_mu1(const RatPoly& f, const BigRational& z,
                                   const QContext& ctx) {
  return divided_difference(f, z, [&](int t) { return power_moment(t, ctx); });
}

BigRational divided_difference_mu2(const RatPoly& f, const BigRational& z,
                                   const QContext& ctx) {
  return divided_difference(f, z, [&](int t) { return log_moment(t, ctx); });
}

RatPoly poch_poly_product(int n, const BigRational& q) {
  RatPoly prod(BigRational(1));
  BigRational qk(1);
  for (int k = 0; k < n; ++k) {
    prod = prod * RatPoly(std::vector<BigRational>{BigRational(1), -qk});
    qk *= q;
  }
  return prod;
}

RatPoly poch_poly_qbinomial(int n, const BigRational& q) {
  RatPoly sum;
  for (int k = 0; k <= n; ++k) {
    BigRational c = gauss_binomial(n, k, q) *
                    pow_rational(q, static_cast<long>(k) * (k - 1) / 2);
    if (k % 2 == 1) c = -c;
    sum += RatPoly::monomial(k, c);
  }
  return sum;
}

std::vector<BigRational> to_poch_basis(const RatPoly& f, const BigRational& q) {
  std::vector<BigRational> out(static_cast<size_t>(f.degree() + 1), BigRational(0));
  for (int n = 0; n <= f.degree(); ++n) {
    const BigRational& cn = f.coeff(n);
    if (cn == 0) continue;
    for (int k = 0; k <= n; ++k) {
      BigRational c = gauss_binomial(n, k, q) *
                      pow_rational(q, -static_cast<long>(n) * k +
                                          static_cast<long>(k) * (k + 1) / 2);
      if (k % 2 == 1) c = -c;
      out[static_cast<size_t>(k)] += cn * c;
    }
  }
  return out;
}

RatPoly from_poch_basis(const std::vector<BigRational>& coeffs, const BigRational& q) {
  RatPoly sum;
  for (size_t k = 0; k < coeffs.size(); ++k)
    sum += poch_poly_product(static_cast<int>(k), q).scaled(coeffs[k]);
  return sum;
}

namespace {

// Alternating series sum_j (-1)^j / ((2j+1) x^(2j+1)): consecutive partial
// sums bracket the limit.
RationalInterval arctan_inverse(long x, int terms) {
  BigRational sum(0);
  BigRational prev(0);
  for (int j = 0; j < terms; ++j) {
    prev = sum;
    BigRational term = make_rational(1, BigInt(2 * j + 1) *
                                            pow_int(BigInt(x), 2 * j + 1));
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum < prev ? RationalInterval(sum, prev) : RationalInterval(prev, sum);
}

}  // namespace

RationalInterval pi_squared_machin(int terms) {
  RationalInterval a5 = arctan_inverse(5, terms);
  RationalInterval a239 = arctan_inverse(239, terms);
  RationalInterval pi = a5.scaled(BigRational(16)) - a239.scaled(BigRational(4));
  if (sgn(pi.lo) <= 0) throw std::logic_error("pi enclosure not positive");
  return RationalInterval(pi.lo * pi.lo, pi.hi * pi.hi);
}

RationalInterval pi_squared_series(int terms) {
  BigRational partial(0);
  for (int k = 1; k <= terms; ++k) partial += make_rational(1, BigInt(k) * k);
  // sum_{k>K} 1/k^2 lies strictly between 1/(K+1) and 1/K
  BigRational lo = partial + make_rational(1, terms + 1);
  BigRational hi = partial + make_rational(1, terms);
  return RationalInterval(lo * 6, hi * 6);
}

}  // namespace qzeta::oracles
