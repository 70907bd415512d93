#pragma once

#include <deque>
#include <map>

#include "qzeta/interval.hpp"
#include "qzeta/polynomial.hpp"

namespace qzeta {

// Cyclotomic polynomials Phi_n and the normalizers d_n(p) = prod_{k<=n} Phi_k(p).
// Phi_n is obtained by exact division of x^n - 1 by the proper-divisor
// cyclotomics; the division is self-checking (a nonzero remainder throws).
// d_n(p) values are cached incrementally via d_n = Phi_n(p) * d_{n-1}.
//
// Build once, then read-only; extending the table needs exclusive access.
class CycloTable {
 public:
  const IntPoly& phi(int n);

  // Phi_n(p) as an integer, p >= 2.
  BigInt phi_at(int n, long p);

  // d_n(p) = prod_{k=1}^n Phi_k(p) > 0
  const BigInt& d_eval(int n, long p);

 private:
  // deques keep references stable while the tables extend
  std::deque<IntPoly> phi_;               // phi_[n-1] = Phi_n
  std::map<long, std::deque<BigInt>> d_;  // d_[p][n-1] = d_n(p)
};

// True iff (p^l - 1) | d_n(p) for every 1 <= l <= n, by exact division.
bool d_is_common_multiple(int n, long p, CycloTable& table);

// Enclosure of log_p(d_n(p)) / n^2; approaches 3/pi^2 as n grows.
RationalInterval d_growth_exponent(int n, long p, CycloTable& table, int frac_bits = 48);

}  // namespace qzeta
