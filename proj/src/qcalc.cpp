#include "qzeta/qcalc.hpp"

#include <map>

namespace qzeta {

BigRational qpochhammer(const BigRational& a, const BigRational& q, int n) {
  if (n < 0) throw std::invalid_argument("qpochhammer: n must be >= 0");
  BigRational prod(1);
  BigRational qk(1);
  for (int k = 0; k < n; ++k) {
    prod *= BigRational(1) - a * qk;
    qk *= q;
  }
  return prod;
}

namespace {

// Triangle rows of [r j]_base for r = 0..n, extended on demand.
template <class T>
const std::vector<std::vector<T>>& pascal_rows(std::map<T, std::vector<std::vector<T>>>& cache,
                                               const T& base, int n) {
  auto& rows = cache[base];
  if (rows.empty()) rows.push_back({T(1)});
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const int r = static_cast<int>(rows.size());
    std::vector<T> row(static_cast<size_t>(r) + 1, T(0));
    T bpow(1);
    row[0] = T(1);
    for (int j = 1; j < r; ++j) {
      bpow *= base;  // base^j
      row[static_cast<size_t>(j)] =
          prev[static_cast<size_t>(j - 1)] + bpow * prev[static_cast<size_t>(j)];
    }
    row[static_cast<size_t>(r)] = T(1);
    rows.push_back(std::move(row));
  }
  return rows;
}

thread_local std::map<BigRational, std::vector<std::vector<BigRational>>> rat_binomials;
thread_local std::map<BigInt, std::vector<std::vector<BigInt>>> int_binomials;

}  // namespace

BigRational gauss_binomial(int n, int k, const BigRational& base) {
  if (sgn(base) == 0) throw std::invalid_argument("gauss_binomial: base must be nonzero");
  if (n < 0) throw std::invalid_argument("gauss_binomial: n must be >= 0");
  if (k < 0 || k > n) return BigRational(0);
  return pascal_rows(rat_binomials, base, n)[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

BigInt gauss_binomial_int(int n, int k, const BigInt& base) {
  if (sgn(base) == 0) throw std::invalid_argument("gauss_binomial_int: base must be nonzero");
  if (n < 0) throw std::invalid_argument("gauss_binomial_int: n must be >= 0");
  if (k < 0 || k > n) return BigInt(0);
  return pascal_rows(int_binomials, base, n)[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

IntPoly gauss_binomial_poly(int n, int k) {
  if (n < 0) throw std::invalid_argument("gauss_binomial_poly: n must be >= 0");
  if (k < 0 || k > n) return IntPoly();
  // same recurrence with base = x; no memo, sizes involved are tiny
  std::vector<IntPoly> row{IntPoly(BigInt(1))};
  for (int r = 1; r <= n; ++r) {
    std::vector<IntPoly> next(static_cast<size_t>(r) + 1);
    next[0] = IntPoly(BigInt(1));
    next[static_cast<size_t>(r)] = IntPoly(BigInt(1));
    for (int j = 1; j < r; ++j)
      next[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] +
                                     row[static_cast<size_t>(j)].shifted_up(j);
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

RatPoly q_derivative(const RatPoly& f, const BigRational& r) {
  if (r == 1 || sgn(r) == 0)
    throw std::invalid_argument("q_derivative: r must differ from 0 and 1");
  if (f.degree() <= 0) return RatPoly();
  // (f(x) - f(rx)) / ((1-r)x) = sum_{s>=1} c_s [s]_r x^{s-1},
  // [s]_r = (1-r^s)/(1-r) = 1 + r + ... + r^{s-1}
  std::vector<BigRational> c(static_cast<size_t>(f.degree()));
  BigRational bracket(0);
  for (int s = 1; s <= f.degree(); ++s) {
    bracket = bracket * r + 1;
    c[static_cast<size_t>(s - 1)] = f.coeff(s) * bracket;
  }
  return RatPoly(std::move(c));
}

BigRational power_moment(int s, const QContext& ctx) {
  if (s < 0) throw std::invalid_argument("power_moment: s must be >= 0");
  BigInt ps1 = ctx.ppow(static_cast<unsigned long>(s) + 1);
  return make_rational(ps1, ps1 - 1);
}

BigRational log_moment(int s, const QContext& ctx) {
  if (s < 0) throw std::invalid_argument("log_moment: s must be >= 0");
  BigInt ps1 = ctx.ppow(static_cast<unsigned long>(s) + 1);
  BigInt den = (ps1 - 1) * (ps1 - 1);
  return make_rational(std::move(ps1), std::move(den));
}

BigRational modified_moment(int r, const QContext& ctx) {
  if (r < 1) throw std::invalid_argument("modified_moment: r must be >= 1");
  BigInt pr = ctx.ppow(static_cast<unsigned long>(r));
  return make_rational(pr, pr - 1);
}

BigRational log_modified_moment(int r, const QContext& ctx) {
  if (r < 1) throw std::invalid_argument("log_modified_moment: r must be >= 1");
  BigRational harmonic(0);
  for (int i = 1; i <= r; ++i) {
    BigInt pi = ctx.ppow(static_cast<unsigned long>(i));
    harmonic += make_rational(1, pi - 1);
  }
  return modified_moment(r, ctx) * harmonic;
}

BigRational integrate_dq(const RatPoly& f, const QContext& ctx) {
  BigRational acc(0);
  for (int s = 0; s <= f.degree(); ++s) acc += f.coeff(s) * power_moment(s, ctx);
  return acc;
}

BigRational integrate_logq_dq(const RatPoly& f, const QContext& ctx) {
  BigRational acc(0);
  for (int s = 0; s <= f.degree(); ++s) acc += f.coeff(s) * log_moment(s, ctx);
  return acc;
}

std::vector<RatPoly> poch_basis(const QContext& ctx, int max_len) {
  if (max_len < 0) throw std::invalid_argument("poch_basis: max_len must be >= 0");
  std::vector<RatPoly> basis;
  basis.reserve(static_cast<size_t>(max_len) + 1);
  basis.push_back(RatPoly(BigRational(1)));
  for (int l = 1; l <= max_len; ++l) {
    RatPoly factor(std::vector<BigRational>{BigRational(1), -ctx.qpow(l)});
    basis.push_back(basis.back() * factor);
  }
  return basis;
}

}  // namespace qzeta
