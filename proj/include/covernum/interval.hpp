#pragma once

#include "covernum/numbers.hpp"

namespace covernum {

// Closed rational interval. Endpoint arithmetic is exact, so intervals only
// widen where irrational constants (e, pi, roots) enter.
struct RatInterval {
  Rational lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  static RatInterval exact(const Rational& r) { return {r, r}; }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator*(const RatInterval& o) const;
  RatInterval operator/(const RatInterval& o) const;  // requires 0 outside o

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

// Three-valued comparisons for verdicts that must never be rounding artifacts.
enum class Verdict3 { Holds, Fails, Unknown };

inline Verdict3 interval_lt(const RatInterval& a, const RatInterval& b) {
  if (a.hi < b.lo) return Verdict3::Holds;
  if (a.lo >= b.hi) return Verdict3::Fails;
  return Verdict3::Unknown;
}

inline Verdict3 interval_le(const RatInterval& a, const RatInterval& b) {
  if (a.hi <= b.lo) return Verdict3::Holds;
  if (a.lo > b.hi) return Verdict3::Fails;
  return Verdict3::Unknown;
}

// e enclosed by a partial exponential series plus tail bound.
RatInterval e_interval(unsigned terms);

// pi via Machin's formula with alternating-series truncation bounds.
RatInterval pi_interval(unsigned terms);

// sqrt with outward integer-sqrt bounds at 2^-bits resolution; x >= 0.
RatInterval sqrt_interval(const Rational& x, unsigned bits);
RatInterval sqrt_interval(const RatInterval& x, unsigned bits);

// Integer power, base assumed non-negative.
RatInterval pow_interval(const RatInterval& base, unsigned long e);

// 2^x for a rational-interval exponent (any sign), via repeated square roots.
RatInterval pow2_interval(const RatInterval& exponent, unsigned bits);

}  // namespace covernum
