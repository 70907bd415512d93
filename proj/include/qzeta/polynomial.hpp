#pragma once

#include <utility>
#include <vector>

#include "qzeta/arith.hpp"

namespace qzeta {

// Dense univariate polynomial, coefficient of x^i at index i, trailing zeros
// trimmed. The zero polynomial has an empty coefficient vector and degree -1.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Poly(T constant) {
    if (!(constant == 0)) c_.push_back(std::move(constant));
  }

  static Poly monomial(int deg, T coeff) {
    if (coeff == 0) return Poly();
    std::vector<T> c(static_cast<size_t>(deg) + 1, T(0));
    c.back() = std::move(coeff);
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(1, T(1)); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
    return c_[static_cast<size_t>(i)];
  }
  const T& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  T operator()(const T& at) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * at;
      acc += *it;
    }
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  Poly operator-() const {
    std::vector<T> c(c_);
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
  }

  Poly scaled(const T& s) const {
    if (s == 0) return Poly();
    std::vector<T> c(c_);
    for (auto& v : c) v *= s;
    return Poly(std::move(c));
  }

  // f(r x)
  Poly scaled_argument(const T& r) const {
    std::vector<T> c(c_);
    T rp(1);
    for (size_t i = 1; i < c.size(); ++i) {
      rp *= r;
      c[i] *= rp;
    }
    return Poly(std::move(c));
  }

  // f * x^k
  Poly shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<T> c(static_cast<size_t>(k), T(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(std::move(c));
  }

  bool operator==(const Poly&) const = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<BigRational>;

template <class T>
Poly<T> derivative(const Poly<T>& f) {
  if (f.degree() <= 0) return Poly<T>();
  std::vector<T> c(static_cast<size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) c[static_cast<size_t>(i - 1)] = f.coeff(i) * T(i);
  return Poly<T>(std::move(c));
}

RatPoly to_rational(const IntPoly& f);

// Quotient and remainder over the rationals; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// Exact quotient in Z[x]; throws IntegralityViolation if the division is
// inexact at any step (coefficient not divisible, or nonzero remainder).
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// Remainder of a modulo a monic divisor, computed entirely in Z[x].
IntPoly rem_monic(const IntPoly& a, const IntPoly& monic);

// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
BigInt content(const IntPoly& f);

// The unique positive-rational multiple of f with coprime integer
// coefficients (sign of the leading coefficient is preserved).
IntPoly primitive_part(const RatPoly& f);

}  // namespace qzeta
