#pragma once

#include <string>

#include "qzeta/arith.hpp"

namespace qzeta {

// Closed interval with exact rational endpoints, lo <= hi. All arithmetic
// here is exact (no rounding), so enclosures stay outward-correct by
// construction.
struct RationalInterval {
  BigRational lo, hi;

  RationalInterval() : lo(0), hi(0) {}
  explicit RationalInterval(BigRational point) : lo(point), hi(std::move(point)) {}
  RationalInterval(BigRational lo_, BigRational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw std::invalid_argument("RationalInterval: lo > hi");
  }

  BigRational width() const { return hi - lo; }
  BigRational midpoint() const { return (lo + hi) / 2; }
  bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool contained_in(const RationalInterval& outer) const {
    return outer.lo <= lo && hi <= outer.hi;
  }
  bool intersects(const RationalInterval& o) const { return lo <= o.hi && o.lo <= hi; }

  // Largest absolute value attained on the interval.
  BigRational mag() const {
    BigRational a = abs(lo), b = abs(hi);
    return a > b ? a : b;
  }

  // Enclosure of |x| over the interval.
  RationalInterval abs_interval() const {
    if (sgn(lo) >= 0) return *this;
    if (sgn(hi) <= 0) return RationalInterval(-hi, -lo);
    return RationalInterval(BigRational(0), mag());
  }

  RationalInterval operator+(const RationalInterval& o) const {
    return RationalInterval(lo + o.lo, hi + o.hi);
  }
  RationalInterval operator-(const RationalInterval& o) const {
    return RationalInterval(lo - o.hi, hi - o.lo);
  }
  RationalInterval operator-() const { return RationalInterval(-hi, -lo); }
  RationalInterval operator+(const BigRational& c) const {
    return RationalInterval(lo + c, hi + c);
  }
  RationalInterval operator-(const BigRational& c) const {
    return RationalInterval(lo - c, hi - c);
  }
  RationalInterval scaled(const BigRational& c) const {
    if (sgn(c) >= 0) return RationalInterval(lo * c, hi * c);
    return RationalInterval(hi * c, lo * c);
  }

  bool operator==(const RationalInterval&) const = default;
};

// Intersection of two enclosures of the same quantity; throws std::logic_error
// if they are disjoint (which would mean one of them is wrong).
RationalInterval intersect(const RationalInterval& a, const RationalInterval& b,
                           const char* what = "enclosures");

// Enclosure of log_base(x) for x > 0, base >= 2, computed by exact binary
// digit extraction (squaring with outward dyadic rounding); no floating
// point anywhere. Width <= 2^(1-frac_bits).
RationalInterval log_base(const BigRational& x, long base, int frac_bits = 48);

// Monotone image of an interval with positive lower endpoint.
RationalInterval log_base(const RationalInterval& x, long base, int frac_bits = 48);

// Hard-coded enclosure of pi^2 of width 1e-30; validated in the test suite
// against two independent series enclosures.
const RationalInterval& pi_squared();

// "[lo, hi]" with outward-rounded decimal endpoints.
std::string to_string(const RationalInterval& iv, int significant_digits = 12);

// "m ± r" rendering: midpoint to the given digits plus an upper bound on the
// distance from the midpoint to either endpoint.
std::string to_string_midrad(const RationalInterval& iv, int significant_digits = 12);

}  // namespace qzeta
