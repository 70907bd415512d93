#include "qzeta/polynomial.hpp"

namespace qzeta {

RatPoly to_rational(const IntPoly& f) {
  std::vector<BigRational> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod: zero divisor");
  RatPoly r = a;
  std::vector<BigRational> q(
      a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree()) + 1 : 0,
      BigRational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    BigRational t = r.leading() / b.leading();
    q[static_cast<size_t>(shift)] = t;
    r -= b.shifted_up(shift).scaled(t);
  }
  return {RatPoly(std::move(q)), std::move(r)};
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  IntPoly r = a;
  std::vector<BigInt> q(
      a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree()) + 1 : 0,
      BigInt(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    BigInt t = divide_exact_int(r.leading(), b.leading(), "polynomial division step");
    q[static_cast<size_t>(shift)] = t;
    r -= b.shifted_up(shift).scaled(t);
  }
  if (!r.is_zero()) throw IntegralityViolation("divide_exact: nonzero remainder");
  return IntPoly(std::move(q));
}

IntPoly rem_monic(const IntPoly& a, const IntPoly& monic) {
  if (monic.is_zero() || !(monic.leading() == 1))
    throw std::invalid_argument("rem_monic: divisor must be monic");
  IntPoly r = a;
  while (!r.is_zero() && r.degree() >= monic.degree()) {
    const int shift = r.degree() - monic.degree();
    r -= monic.shifted_up(shift).scaled(r.leading());
  }
  return r;
}

BigInt content(const IntPoly& f) {
  BigInt g(0);
  for (const auto& v : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const RatPoly& f) {
  if (f.is_zero()) return IntPoly();
  BigInt den_lcm(1);
  for (const auto& v : f.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<BigInt> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) {
    BigRational scaled = v * BigRational(den_lcm);
    c.push_back(to_integer(scaled, "primitive_part coefficient"));
  }
  IntPoly g(std::move(c));
  BigInt cont = content(g);
  if (cont == 1) return g;
  std::vector<BigInt> reduced;
  reduced.reserve(g.coeffs().size());
  for (const auto& v : g.coeffs()) reduced.push_back(divide_exact_int(v, cont));
  return IntPoly(std::move(reduced));
}

}  // namespace qzeta
