#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qzeta {

using BigInt = mpz_class;
using BigRational = mpq_class;

// A value that must be an integer has a nontrivial denominator, or an
// exact integer division left a remainder.
struct IntegralityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// num/den in lowest terms, denominator > 0.
BigRational make_rational(BigInt num, BigInt den);

BigInt pow_int(const BigInt& base, unsigned long exp);

// base^exp with exp possibly negative; base must be nonzero when exp < 0.
BigRational pow_rational(const BigRational& base, long exp);

inline bool is_integral(const BigRational& x) { return x.get_den() == 1; }

// Exact conversion to an integer; throws IntegralityViolation otherwise.
BigInt to_integer(const BigRational& x, const char* what = "value");

// a / b when b | a; throws IntegralityViolation on a remainder.
BigInt divide_exact_int(const BigInt& a, const BigInt& b, const char* what = "quotient");

// Largest e with base^e <= x, for x > 0 and base >= 2. Exact comparisons only.
long floor_log(long base, const BigRational& x);

enum class Rounding { Down = -1, Nearest = 0, Up = 1 };

// Decimal rendering with directed rounding (Down = toward -inf, Up = toward +inf).
// Uses plain notation near unit magnitude, scientific otherwise.
std::string to_decimal_string(const BigRational& x, int significant_digits,
                              Rounding mode = Rounding::Nearest);

}  // namespace qzeta
