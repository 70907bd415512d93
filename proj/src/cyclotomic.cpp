#include "qzeta/cyclotomic.hpp"

namespace qzeta {

const IntPoly& CycloTable::phi(int n) {
  if (n < 1) throw std::invalid_argument("CycloTable::phi: n must be >= 1");
  while (static_cast<int>(phi_.size()) < n) {
    const int m = static_cast<int>(phi_.size()) + 1;
    // x^m - 1
    std::vector<BigInt> c(static_cast<size_t>(m) + 1, BigInt(0));
    c[0] = -1;
    c[static_cast<size_t>(m)] = 1;
    IntPoly numerator(std::move(c));
    IntPoly divisor(BigInt(1));
    for (int d = 1; d < m; ++d)
      if (m % d == 0) divisor = divisor * phi_[static_cast<size_t>(d - 1)];
    // exact by construction; a remainder would mean an arithmetic bug
    phi_.push_back(divide_exact(numerator, divisor));
  }
  return phi_[static_cast<size_t>(n - 1)];
}

BigInt CycloTable::phi_at(int n, long p) {
  if (p < 2) throw std::invalid_argument("CycloTable::phi_at: p must be >= 2");
  return phi(n)(BigInt(p));
}

const BigInt& CycloTable::d_eval(int n, long p) {
  if (n < 1) throw std::invalid_argument("CycloTable::d_eval: n must be >= 1");
  if (p < 2) throw std::invalid_argument("CycloTable::d_eval: p must be >= 2");
  auto& values = d_[p];
  while (static_cast<int>(values.size()) < n) {
    const int m = static_cast<int>(values.size()) + 1;
    BigInt prev = values.empty() ? BigInt(1) : values.back();
    values.push_back(prev * phi_at(m, p));
  }
  return values[static_cast<size_t>(n - 1)];
}

bool d_is_common_multiple(int n, long p, CycloTable& table) {
  const BigInt& d = table.d_eval(n, p);
  for (int l = 1; l <= n; ++l) {
    BigInt divisor = pow_int(BigInt(p), static_cast<unsigned long>(l)) - 1;
    if (!mpz_divisible_p(d.get_mpz_t(), divisor.get_mpz_t())) return false;
  }
  return true;
}

RationalInterval d_growth_exponent(int n, long p, CycloTable& table, int frac_bits) {
  const BigInt& d = table.d_eval(n, p);
  if (d == 1) return RationalInterval(BigRational(0));  // log_p(1) = 0 exactly
  RationalInterval lg = log_base(BigRational(d), p, frac_bits);
  return lg.scaled(make_rational(1, BigInt(n) * n));
}

}  // namespace qzeta
