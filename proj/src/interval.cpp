#include "qzeta/interval.hpp"

namespace qzeta {

RationalInterval intersect(const RationalInterval& a, const RationalInterval& b,
                           const char* what) {
  if (!a.intersects(b))
    throw std::logic_error(std::string("disjoint ") + what + ": [" +
                           a.lo.get_str() + ", " + a.hi.get_str() + "] vs [" +
                           b.lo.get_str() + ", " + b.hi.get_str() + "]");
  return RationalInterval(a.lo > b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi);
}

namespace {

// Round to the dyadic grid 2^-prec.
BigRational dyadic_floor(const BigRational& v, unsigned long prec) {
  BigInt scaled_num = v.get_num() << prec;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), v.get_den().get_mpz_t());
  return make_rational(std::move(q), BigInt(1) << prec);
}

BigRational dyadic_ceil(const BigRational& v, unsigned long prec) {
  BigInt scaled_num = v.get_num() << prec;
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), v.get_den().get_mpz_t());
  return make_rational(std::move(q), BigInt(1) << prec);
}

}  // namespace

RationalInterval log_base(const BigRational& x, long base, int frac_bits) {
  if (base < 2) throw std::invalid_argument("log_base: base must be >= 2");
  if (sgn(x) <= 0) throw std::domain_error("log_base: x must be positive");
  if (frac_bits < 1 || frac_bits > 4096)
    throw std::invalid_argument("log_base: frac_bits out of range");

  // integer part: base^k <= x < base^(k+1), then reduce into [1, base)
  const long k = floor_log(base, x);
  BigRational r = x * pow_rational(BigRational(base), -k);

  // Binary digit extraction: after `steps` clean steps,
  //   log_base(r) = digits + 2^-steps * log_base(y)  with the true y in [1, base),
  // where y is tracked by an outward-rounded dyadic bracket. Digit decisions
  // are made only when the bracket is decisive, so they are exact; if the
  // bracket ever straddles the base we stop with the digits already in hand.
  const unsigned long prec = static_cast<unsigned long>(frac_bits) + 96;
  const BigRational b(base);
  BigRational lo = dyadic_floor(r, prec);
  BigRational hi = dyadic_ceil(r, prec);

  BigRational digits(0);
  BigRational weight = make_rational(1, 2);
  int steps = 0;
  for (int i = 1; i <= frac_bits; ++i) {
    BigRational lo2 = dyadic_floor(lo * lo, prec);
    BigRational hi2 = dyadic_ceil(hi * hi, prec);
    if (hi2 < b) {
      lo = std::move(lo2);
      hi = std::move(hi2);
    } else if (lo2 >= b) {
      digits += weight;
      lo = dyadic_floor(lo2 / b, prec);
      hi = dyadic_ceil(hi2 / b, prec);
    } else {
      break;
    }
    steps = i;
    weight /= 2;
  }

  // remaining fraction lies in [0, 2^-steps)
  BigRational frac_hi = digits + pow_rational(BigRational(2), -steps);
  return RationalInterval(BigRational(k) + digits, BigRational(k) + frac_hi);
}

RationalInterval log_base(const RationalInterval& x, long base, int frac_bits) {
  if (sgn(x.lo) <= 0) throw std::domain_error("log_base: interval must be positive");
  RationalInterval lo_enc = log_base(x.lo, base, frac_bits);
  RationalInterval hi_enc = log_base(x.hi, base, frac_bits);
  return RationalInterval(lo_enc.lo, hi_enc.hi);
}

const RationalInterval& pi_squared() {
  // pi^2 = 9.869604401089358618834490999876151135...
  static const RationalInterval enc(
      make_rational(BigInt("9869604401089358618834490999876"),
                    pow_int(BigInt(10), 30)),
      make_rational(BigInt("9869604401089358618834490999877"),
                    pow_int(BigInt(10), 30)));
  return enc;
}

std::string to_string(const RationalInterval& iv, int significant_digits) {
  return "[" + to_decimal_string(iv.lo, significant_digits, Rounding::Down) + ", " +
         to_decimal_string(iv.hi, significant_digits, Rounding::Up) + "]";
}

std::string to_string_midrad(const RationalInterval& iv, int significant_digits) {
  BigRational mid = iv.midpoint();
  BigRational rad = iv.width() / 2;
  std::string m = to_decimal_string(mid, significant_digits, Rounding::Nearest);
  if (sgn(rad) == 0) return m;
  return m + " ± " + to_decimal_string(rad, 3, Rounding::Up);
}

}  // namespace qzeta
