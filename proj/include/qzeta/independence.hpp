#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qzeta/approximants.hpp"

namespace qzeta {

enum class CheckStatus { Pass, Fail, NotAttempted };

// Certificate that a p*/q*/r* combination is nonzero: residue != 0 modulo
// the stated modulus. For c != 0 the modulus is Phi_{2n-1}(p); for c = 0,
// b != 0 it is d_{2n-1}(p) * Phi_{2n-1}(p), whose divisibility pattern
// separates the q* term; for b = c = 0 the combination a p* is tested
// directly (modulus 0 marks that case).
struct IndependenceWitness {
  long p = 2;
  int n = 1;
  std::array<long, 3> abc{0, 0, 0};
  BigInt combination;
  BigInt modulus;
  BigInt residue;

  bool valid() const {
    return modulus == 0 ? combination != 0 : residue != 0;
  }
};

// [n+2m choose m]_x == 1 mod Phi_{n+m}(x), as polynomials over Z.
bool jonathan_congruence(int n, int m);

// a p* + b q* + c r*  ==  -c d_{2n-1}(p)^2/(p^{2n-1}-1)^2  mod Phi_{2n-1}(p),
// for prime 2n-1; the inner division is checked exact before reducing.
bool step1_congruence(const ApproximantRow& row, const std::array<long, 3>& abc,
                      CycloTable& table);

// Phi_{2n-1}(p) does not divide d_{2n-1}(p)^2/(p^{2n-1}-1)^2, for prime 2n-1.
bool step3_nondivisibility(int n, long p, CycloTable& table);

// Nonzero certificates for every (a,b,c) != 0 with |a|,|b|,|c| <= abc_bound,
// over all rows with 2n-1 prime and 2n-1 > abc_bound.
std::vector<IndependenceWitness> condition1_witnesses(
    const std::vector<ApproximantRow>& rows, long abc_bound, CycloTable& table);

// Every prime divisor s of Phi_n(p) satisfies s == 1 (mod n) or s | n.
// Factoring is plain trial division behind a size guard; oversized inputs
// return NotAttempted instead of running unbounded.
CheckStatus legendre_divisor_check(int n, long p, CycloTable& table,
                                   std::vector<BigInt>* factors_out = nullptr);

// Deterministic trial-division primality for small v.
bool is_prime_small(long v);

}  // namespace qzeta
