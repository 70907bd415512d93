#include "qzeta/qjacobi.hpp"

namespace qzeta {

namespace {

void check_build_args(int n, int m) {
  if (n < 0 || m < 0 || m > n)
    throw std::invalid_argument("q-Jacobi build requires 0 <= m <= n");
}

void check_normalization(const QJacobiPoly& poly) {
  if (!(poly.monomial.coeff(0) == 1))
    throw std::logic_error("q-Jacobi build: value at 0 is not 1");
  if (poly.monomial.degree() != poly.n + poly.m)
    throw std::logic_error("q-Jacobi build: wrong degree");
}

}  // namespace

QJacobiPoly build_explicit(int n, int m, const QContext& ctx) {
  check_build_args(n, m);
  const BigRational& q = ctx.q;

  // (q;q)_i for i <= n+m
  std::vector<BigRational> qq(static_cast<size_t>(n + m) + 1);
  qq[0] = 1;
  for (int i = 1; i <= n + m; ++i) qq[static_cast<size_t>(i)] =
      qq[static_cast<size_t>(i - 1)] * (BigRational(1) - ctx.qpow(i));

  std::vector<BigRational> coeffs(static_cast<size_t>(n + m) + 1, BigRational(0));
  for (int k = 0; k <= m; ++k) {
    for (int j = 0; j <= n; ++j) {
      BigRational term = ctx.qpow(k + j);                       // (qx)^{k+j} -> q^{k+j}
      term /= qq[static_cast<size_t>(k)] * qq[static_cast<size_t>(j)];
      term *= ctx.qpow(-static_cast<long>(k) * n);              // q^{-kn}
      term *= qpochhammer(ctx.qpow(n + 1), q, j + k) / qq[static_cast<size_t>(j + k)];
      term *= qpochhammer(ctx.qpow(n + m + 1), q, k) / qq[static_cast<size_t>(k)];
      term *= qpochhammer(ctx.qpow(-n), q, j);
      term *= qpochhammer(ctx.qpow(-m), q, k);
      coeffs[static_cast<size_t>(k + j)] += term;
    }
  }

  QJacobiPoly poly{n, m, ctx.p, RatPoly(std::move(coeffs)), {}};
  check_normalization(poly);
  return poly;
}

QJacobiPoly build_pochhammer(int n, int m, const QContext& ctx) {
  check_build_args(n, m);
  const BigInt p(ctx.p);
  const int total_sign = ((n + m) % 2 == 0) ? 1 : -1;

  std::vector<PochTerm> terms;
  terms.reserve(static_cast<size_t>((n + 1) * (m + 1)));
  for (int k = 0; k <= m; ++k) {
    for (int j = 0; j <= n; ++j) {
      BigInt c = gauss_binomial_int(n + m + k, m, p);
      c *= gauss_binomial_int(n + k + j, n, p);
      c *= gauss_binomial_int(m, k, p);
      c *= gauss_binomial_int(n, j, p);
      const unsigned long e1 =
          static_cast<unsigned long>(n - j) * static_cast<unsigned long>(n - j + 1) / 2;
      const unsigned long e2 =
          static_cast<unsigned long>(m - k) * static_cast<unsigned long>(m - k + 1) / 2;
      c *= pow_int(p, e1) * pow_int(p, e2);
      if ((total_sign < 0) != ((k + j) % 2 == 1)) c = -c;  // (-1)^{n+m} (-1)^{k+j}
      terms.push_back(PochTerm{k, j, std::move(c)});
    }
  }

  // expand into the monomial basis
  std::vector<RatPoly> basis = poch_basis(ctx, n + m);
  RatPoly expanded;
  for (const auto& t : terms)
    expanded += basis[static_cast<size_t>(t.k + t.j)].scaled(BigRational(t.coeff));

  QJacobiPoly poly{n, m, ctx.p, std::move(expanded), std::move(terms)};
  check_normalization(poly);
  return poly;
}

QJacobiPoly build_rodrigues(int n, int m, const QContext& ctx) {
  check_build_args(n, m);
  const BigRational& q = ctx.q;
  const BigRational p_rat(ctx.p);  // q^{-1}

  // (qx;q)_{n+m} x^m
  RatPoly work = poch_basis(ctx, n + m).back().shifted_up(m);
  for (int i = 0; i < m; ++i) work = q_derivative(work, p_rat);
  work = work.shifted_up(n);
  for (int i = 0; i < n; ++i) work = q_derivative(work, p_rat);

  BigRational factor = pow_rational(q, static_cast<long>(n) * (n - 1) / 2 +
                                           static_cast<long>(m) * (m - 1) / 2);
  factor *= pow_rational(q - 1, n + m);
  factor /= qpochhammer(q, q, n) * qpochhammer(q, q, m);
  if ((n + m) % 2 == 1) factor = -factor;

  QJacobiPoly poly{n, m, ctx.p, work.scaled(factor), {}};
  check_normalization(poly);
  return poly;
}

bool verify_orthogonality(const QJacobiPoly& poly) {
  const QContext ctx = poly.ctx();
  for (int l = 0; l < poly.n; ++l)
    if (sgn(integrate_dq(poly.monomial.shifted_up(l), ctx)) != 0) return false;
  for (int l = 0; l < poly.m; ++l)
    if (sgn(integrate_logq_dq(poly.monomial.shifted_up(l), ctx)) != 0) return false;
  return true;
}

BigRational leading_coefficient(int n, int m, const QContext& ctx) {
  check_build_args(n, m);
  const BigRational& q = ctx.q;
  const int sign = ((n + m) % 2 == 0) ? 1 : -1;

  // q-binomial form; p^{(n+m)^2/2 - (n+m)/2} has the integer exponent
  // (n+m)(n+m-1)/2
  const long exponent = static_cast<long>(n + m) * (n + m - 1) / 2;
  BigRational kappa = gauss_binomial(2 * n + m, n, q) * gauss_binomial(n + 2 * m, m, q);
  kappa *= BigRational(pow_int(BigInt(ctx.p), static_cast<unsigned long>(exponent)));
  if (sign < 0) kappa = -kappa;

  // Pochhammer-quotient form of the same constant
  BigRational alt = qpochhammer(ctx.qpow(n + m + 1), q, n) *
                    qpochhammer(ctx.qpow(n + m + 1), q, m);
  alt /= ctx.qpow(static_cast<long>(n) * m) * qpochhammer(q, q, n) * qpochhammer(q, q, m);
  alt /= pow_rational(q, static_cast<long>(n) * (n - 1) / 2 +
                             static_cast<long>(m) * (m - 1) / 2);
  if (sign < 0) alt = -alt;

  if (kappa != alt)
    throw std::logic_error("leading_coefficient: the two closed forms disagree");
  return kappa;
}

namespace {

int sign_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int count_roots_in_unit_interval(const QJacobiPoly& poly) {
  IntPoly f = primitive_part(poly.monomial);
  if (f.degree() <= 0) return 0;

  // Sturm chain with content stripping; only positive rescaling, so signs
  // are preserved.
  std::vector<IntPoly> chain;
  chain.push_back(f);
  chain.push_back(primitive_part(to_rational(derivative(f))));
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    RatPoly rem = divmod(to_rational(chain[chain.size() - 2]),
                         to_rational(chain.back()))
                      .second;
    if (rem.is_zero()) break;
    chain.push_back(primitive_part(-rem));
  }

  // gcd(f, f') is the last nonzero element up to scaling
  if (chain.back().is_zero() || chain.back().degree() > 0)
    throw std::runtime_error("count_roots_in_unit_interval: polynomial is not squarefree");

  const BigInt zero(0), one(1);
  if (chain.front()(zero) == 0 || chain.front()(one) == 0)
    throw std::runtime_error("count_roots_in_unit_interval: root at an endpoint");

  std::vector<int> at0, at1;
  at0.reserve(chain.size());
  at1.reserve(chain.size());
  for (const auto& g : chain) {
    at0.push_back(sgn(g(zero)));
    at1.push_back(sgn(g(one)));
  }
  return sign_variations(at0) - sign_variations(at1);
}

BigInt eval_at_power(const QJacobiPoly& poly, int N) {
  if (N != poly.n + poly.m)
    throw std::invalid_argument("eval_at_power: evaluation point must be p^(n+m)");
  if (poly.poch.empty() && N > 0)
    throw std::logic_error("eval_at_power: (qx;q)-basis form not available");

  const BigInt p(poly.p);
  // poch_value[l] = (q p^N; q)_l = prod_{i=1}^{l} (1 - p^{N-i})
  std::vector<BigInt> poch_value(static_cast<size_t>(N) + 1);
  poch_value[0] = 1;
  for (int l = 1; l <= N; ++l)
    poch_value[static_cast<size_t>(l)] =
        poch_value[static_cast<size_t>(l - 1)] *
        (BigInt(1) - pow_int(p, static_cast<unsigned long>(N - l)));

  BigInt value(0);
  if (N == 0) {
    value = 1;
  } else {
    for (const auto& t : poly.poch)
      value += t.coeff * poch_value[static_cast<size_t>(t.k + t.j)];
  }

  BigRational monomial_value = poly.monomial(BigRational(pow_int(p, static_cast<unsigned long>(N))));
  if (monomial_value != BigRational(value))
    throw std::logic_error("eval_at_power: basis and monomial evaluations disagree");
  return value;
}

BigRational sum_abs_coeffs(const QJacobiPoly& poly) {
  BigRational total(0);
  for (const auto& c : poly.monomial.coeffs()) total += abs(c);
  return total;
}

}  // namespace qzeta
