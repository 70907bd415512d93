#include "qzeta/arith.hpp"

#include <algorithm>
#include <cstdlib>

namespace qzeta {

BigRational make_rational(BigInt num, BigInt den) {
  if (sgn(den) == 0) throw std::invalid_argument("make_rational: zero denominator");
  BigRational r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigRational pow_rational(const BigRational& base, long exp) {
  if (exp == 0) return BigRational(1);
  if (sgn(base) == 0) {
    if (exp > 0) return BigRational(0);
    throw std::domain_error("pow_rational: 0 raised to a negative power");
  }
  const unsigned long mag =
      exp > 0 ? static_cast<unsigned long>(exp)
              : static_cast<unsigned long>(-(exp + 1)) + 1UL;
  BigInt n = pow_int(base.get_num(), mag);
  BigInt d = pow_int(base.get_den(), mag);
  return exp > 0 ? make_rational(std::move(n), std::move(d))
                 : make_rational(std::move(d), std::move(n));
}

BigInt to_integer(const BigRational& x, const char* what) {
  if (!is_integral(x))
    throw IntegralityViolation(std::string(what) + " is not an integer: " + x.get_str());
  return x.get_num();
}

BigInt divide_exact_int(const BigInt& a, const BigInt& b, const char* what) {
  if (sgn(b) == 0) throw std::invalid_argument("divide_exact_int: zero divisor");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw IntegralityViolation(std::string(what) + ": inexact integer division");
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

namespace {

// base^e <= num/den, all positive
bool pow_leq(long base, unsigned long e, const BigRational& x) {
  BigInt lhs = pow_int(BigInt(base), e) * x.get_den();
  return lhs <= x.get_num();
}

// largest e >= 0 with base^e <= x, for x >= 1
long floor_log_geq1(long base, const BigRational& x) {
  if (x < 1) throw std::logic_error("floor_log_geq1: x < 1");
  unsigned long hi = 1;
  while (pow_leq(base, hi, x)) hi *= 2;
  // invariant: base^(hi) > x; search in [hi/2, hi)
  unsigned long lo = hi / 2;  // base^lo <= x unless hi == 1
  if (hi == 1) return 0;
  while (lo + 1 < hi) {
    unsigned long mid = lo + (hi - lo) / 2;
    if (pow_leq(base, mid, x)) lo = mid; else hi = mid;
  }
  return static_cast<long>(lo);
}

}  // namespace

long floor_log(long base, const BigRational& x) {
  if (base < 2) throw std::invalid_argument("floor_log: base must be >= 2");
  if (sgn(x) <= 0) throw std::domain_error("floor_log: x must be positive");
  if (x >= 1) return floor_log_geq1(base, x);
  BigRational inv = make_rational(x.get_den(), x.get_num());
  long e = floor_log_geq1(base, inv);
  // x = 1/inv; if inv == base^e exactly, log is exactly -e
  if (pow_rational(BigRational(base), e) == inv) return -e;
  return -e - 1;
}

std::string to_decimal_string(const BigRational& x, int significant_digits, Rounding mode) {
  if (significant_digits < 1) throw std::invalid_argument("to_decimal_string: digits < 1");
  if (sgn(x) == 0) return "0";

  const bool neg = sgn(x) < 0;
  BigRational mag = abs(x);
  // round the magnitude toward zero / away from zero as implied by the signed mode
  const bool round_down_mag =
      (mode == Rounding::Down && !neg) || (mode == Rounding::Up && neg);

  long e10 = floor_log(10, mag);
  const int d = significant_digits;
  // mantissa = mag * 10^(d-1-e10), an integer in [10^(d-1), 10^d)
  BigRational scaled = mag * pow_rational(BigRational(10), d - 1 - e10);
  BigInt m;
  if (mode == Rounding::Nearest) {
    BigRational half = scaled + make_rational(1, 2);
    mpz_fdiv_q(m.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
  } else if (round_down_mag) {
    mpz_fdiv_q(m.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  } else {
    mpz_cdiv_q(m.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  }
  if (m == pow_int(BigInt(10), static_cast<unsigned long>(d))) {
    m = pow_int(BigInt(10), static_cast<unsigned long>(d - 1));
    ++e10;
  }

  std::string digits = m.get_str();
  std::string out;
  if (e10 >= 0 && e10 < d && e10 <= 15) {
    out = digits.substr(0, e10 + 1);
    std::string frac = digits.substr(e10 + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (e10 < 0 && e10 >= -6) {
    std::string frac(static_cast<size_t>(-e10 - 1), '0');
    frac += digits;
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    out = "0." + frac;
  } else {
    std::string frac = digits.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = digits.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    out += "e" + std::to_string(e10);
  }
  return neg ? "-" + out : out;
}

}  // namespace qzeta
