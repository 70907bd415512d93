#include "qzeta/zeta.hpp"

namespace qzeta {

namespace {

// Exact summation is kept up to this depth; beyond it, terms are accumulated
// as lower/upper integer sums on the dyadic grid 2^-prec (endpoints stay
// exact rationals, the enclosure just widens by at most depth * 2^-prec,
// which the precision choice keeps far below the tail bound).
constexpr long kExactDepthLimit = 80;

class DyadicAccumulator {
 public:
  explicit DyadicAccumulator(unsigned long prec) : prec_(prec) {}

  void add(const BigRational& x) {
    BigInt scaled = x.get_num() << prec_;
    BigInt t;
    mpz_fdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
    lo_ += t;
    mpz_cdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
    hi_ += t;
  }

  RationalInterval interval() const {
    BigInt unit = BigInt(1) << prec_;
    return RationalInterval(make_rational(lo_, unit), make_rational(hi_, unit));
  }

 private:
  unsigned long prec_;
  BigInt lo_{0}, hi_{0};
};

unsigned long grid_precision(long p, long depth) {
  const unsigned long pbits = mpz_sizeinbase(BigInt(p).get_mpz_t(), 2);
  return static_cast<unsigned long>(depth) * pbits + 96;
}

// sum of term(k) for k in [first, first+count), with a proven bound on the
// omitted tail added to the upper endpoint
template <class TermFn>
RationalInterval enclose_series(const QContext& ctx, long first, long count,
                                const BigRational& tail, TermFn&& term) {
  if (count <= kExactDepthLimit) {
    BigRational sum(0);
    for (long k = first; k < first + count; ++k) sum += term(k);
    return RationalInterval(sum, sum + tail);
  }
  DyadicAccumulator acc(grid_precision(ctx.p, count));
  for (long k = first; k < first + count; ++k) acc.add(term(k));
  RationalInterval partial = acc.interval();
  return RationalInterval(partial.lo, partial.hi + tail);
}

}  // namespace

RationalInterval zeta_q1(const QContext& ctx, long depth) {
  if (depth < 1) throw std::invalid_argument("zeta_q1: depth must be >= 1");
  const BigInt p(ctx.p);
  // tail: sum_{k>N} 1/(p^k-1) <= p^{1-N}/(p-1)^2
  BigRational tail = make_rational(
      p, pow_int(p, static_cast<unsigned long>(depth)) * (p - 1) * (p - 1));
  return enclose_series(ctx, 1, depth, tail, [&](long k) {
    return make_rational(1, pow_int(p, static_cast<unsigned long>(k)) - 1);
  });
}

RationalInterval zeta_q2(const QContext& ctx, long depth) {
  if (depth < 1) throw std::invalid_argument("zeta_q2: depth must be >= 1");
  const BigInt p(ctx.p);
  // tail: sum_{k>N} k/(p^k-1) <= p^{1-N}((N+1)p - N)/(p-1)^3
  BigRational tail = make_rational(
      p * (BigInt(depth + 1) * p - depth),
      pow_int(p, static_cast<unsigned long>(depth)) * pow_int(p - 1, 3));
  return enclose_series(ctx, 1, depth, tail, [&](long k) {
    return make_rational(k, pow_int(p, static_cast<unsigned long>(k)) - 1);
  });
}

RationalInterval f1_at_power(const QContext& ctx, int M, long depth) {
  if (M < 1) throw std::invalid_argument("f1_at_power: M must be >= 1");
  if (depth < 1) throw std::invalid_argument("f1_at_power: depth must be >= 1");
  const BigInt p(ctx.p);
  // sum_{k>=depth} 1/(p^{M+k}-1) <= p^{2-M-depth}/(p-1)^2
  BigRational tail = make_rational(
      p * p,
      pow_int(p, static_cast<unsigned long>(M) + static_cast<unsigned long>(depth)) *
          (p - 1) * (p - 1));
  return enclose_series(ctx, 0, depth, tail, [&](long k) {
    return make_rational(1, pow_int(p, static_cast<unsigned long>(M + k)) - 1);
  });
}

RationalInterval f2_at_power(const QContext& ctx, int M, long depth) {
  if (M < 1) throw std::invalid_argument("f2_at_power: M must be >= 1");
  if (depth < 1) throw std::invalid_argument("f2_at_power: depth must be >= 1");
  const BigInt p(ctx.p);
  // sum_{k>=depth} k/(p^{M+k}-1) <= p^{2-M-depth}(depth(p-1)+1)/(p-1)^3
  BigRational tail = make_rational(
      p * p * (BigInt(depth) * (p - 1) + 1),
      pow_int(p, static_cast<unsigned long>(M) + static_cast<unsigned long>(depth)) *
          pow_int(p - 1, 3));
  return enclose_series(ctx, 0, depth, tail, [&](long k) {
    return make_rational(k, pow_int(p, static_cast<unsigned long>(M + k)) - 1);
  });
}

long default_depth(int n) {
  if (n < 1) throw std::invalid_argument("default_depth: n must be >= 1");
  return 12L * n * n + 64;
}

std::vector<RationalInterval> decay_exponents(
    long p, const std::vector<std::pair<int, RationalInterval>>& residuals,
    int frac_bits) {
  std::vector<RationalInterval> out;
  out.reserve(residuals.size());
  for (const auto& [n, residual] : residuals) {
    if (residual.contains_zero())
      throw std::domain_error("decay_exponents: residual enclosure contains zero");
    RationalInterval mag = residual.abs_interval();
    RationalInterval lg = log_base(mag, p, frac_bits);
    out.push_back(lg.scaled(make_rational(1, BigInt(n) * n)));
  }
  return out;
}

RationalInterval divide_positive(const RationalInterval& a, const RationalInterval& b) {
  if (sgn(a.lo) <= 0 || sgn(b.lo) <= 0)
    throw std::domain_error("divide_positive: intervals must be positive");
  return RationalInterval(a.lo / b.hi, a.hi / b.lo);
}

std::pair<RationalInterval, RationalInterval> irrationality_measure_constants(
    const RationalInterval& pi_sq) {
  RationalInterval three_pi2 = pi_sq.scaled(BigRational(3));
  RationalInterval minus4 = pi_sq - BigRational(4);
  RationalInterval minus8 = pi_sq - BigRational(8);
  return {divide_positive(three_pi2, minus4), divide_positive(three_pi2, minus8)};
}

}  // namespace qzeta
