#include "qzeta/independence.hpp"

namespace qzeta {

bool is_prime_small(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool jonathan_congruence(int n, int m) {
  if (n < 0 || m < 0 || n + m < 1)
    throw std::invalid_argument("jonathan_congruence: requires n + m >= 1");
  CycloTable table;
  IntPoly binom = gauss_binomial_poly(n + 2 * m, m);
  IntPoly rem = rem_monic(binom, table.phi(n + m));
  return rem == IntPoly(BigInt(1));
}

namespace {

BigInt mod_nonneg(const BigInt& a, const BigInt& modulus) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

// d_{2n-1}(p)^2 / (p^{2n-1}-1)^2, exactness checked
BigInt step1_rhs_magnitude(const ApproximantRow& row) {
  BigInt denom = pow_int(BigInt(row.p), static_cast<unsigned long>(2 * row.n - 1)) - 1;
  return divide_exact_int(row.d * row.d, denom * denom, "d^2/(p^(2n-1)-1)^2");
}

}  // namespace

bool step1_congruence(const ApproximantRow& row, const std::array<long, 3>& abc,
                      CycloTable& table) {
  if (!is_prime_small(2 * row.n - 1))
    throw std::invalid_argument("step1_congruence: 2n-1 must be prime");
  const auto [a, b, c] = abc;
  BigInt lhs = BigInt(a) * row.p_star + BigInt(b) * row.q_star + BigInt(c) * row.r_star;
  BigInt rhs = BigInt(-c) * step1_rhs_magnitude(row);
  BigInt modulus = table.phi_at(2 * row.n - 1, row.p);
  return mod_nonneg(lhs - rhs, modulus) == 0;
}

bool step3_nondivisibility(int n, long p, CycloTable& table) {
  if (!is_prime_small(2 * n - 1))
    throw std::invalid_argument("step3_nondivisibility: 2n-1 must be prime");
  BigInt denom = pow_int(BigInt(p), static_cast<unsigned long>(2 * n - 1)) - 1;
  const BigInt& d = table.d_eval(2 * n - 1, p);
  BigInt quotient = divide_exact_int(d * d, denom * denom, "d^2/(p^(2n-1)-1)^2");
  BigInt modulus = table.phi_at(2 * n - 1, p);
  return mod_nonneg(quotient, modulus) != 0;
}

std::vector<IndependenceWitness> condition1_witnesses(
    const std::vector<ApproximantRow>& rows, long abc_bound, CycloTable& table) {
  if (abc_bound < 1) throw std::invalid_argument("condition1_witnesses: bound must be >= 1");
  std::vector<IndependenceWitness> witnesses;
  for (const auto& row : rows) {
    if (!is_prime_small(2 * row.n - 1) || 2 * row.n - 1 <= abc_bound) continue;
    BigInt phi = table.phi_at(2 * row.n - 1, row.p);
    BigInt d_phi = row.d * phi;
    for (long a = -abc_bound; a <= abc_bound; ++a) {
      for (long b = -abc_bound; b <= abc_bound; ++b) {
        for (long c = -abc_bound; c <= abc_bound; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          IndependenceWitness w;
          w.p = row.p;
          w.n = row.n;
          w.abc = {a, b, c};
          w.combination =
              BigInt(a) * row.p_star + BigInt(b) * row.q_star + BigInt(c) * row.r_star;
          if (c != 0) {
            w.modulus = phi;
            w.residue = mod_nonneg(w.combination, w.modulus);
          } else if (b != 0) {
            w.modulus = d_phi;
            w.residue = mod_nonneg(w.combination, w.modulus);
          } else {
            w.modulus = 0;  // direct nonzero test of a p*
            w.residue = 0;
          }
          witnesses.push_back(std::move(w));
        }
      }
    }
  }
  return witnesses;
}

CheckStatus legendre_divisor_check(int n, long p, CycloTable& table,
                                   std::vector<BigInt>* factors_out) {
  if (n < 1 || p < 2) throw std::invalid_argument("legendre_divisor_check: bad arguments");
  BigInt value = table.phi_at(n, p);
  if (value < 0) value = -value;
  // trial division only; larger inputs are declined rather than attempted
  static const BigInt kGuard("1000000000000");
  if (value > kGuard) return CheckStatus::NotAttempted;

  const auto admissible = [n](long s) { return (s - 1) % n == 0 || n % s == 0; };
  long v = value.get_si();
  bool ok = true;
  for (long s = 2; static_cast<long long>(s) * s <= v; ++s) {
    if (v % s != 0) continue;
    while (v % s == 0) v /= s;
    if (factors_out) factors_out->push_back(BigInt(s));
    if (!admissible(s)) ok = false;
  }
  if (v > 1) {
    if (factors_out) factors_out->push_back(BigInt(v));
    if (!admissible(v)) ok = false;
  }
  return ok ? CheckStatus::Pass : CheckStatus::Fail;
}

}  // namespace qzeta
