#include "covernum/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace covernum {

RatInterval RatInterval::operator*(const RatInterval& o) const {
  const Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
  if (o.contains_zero()) throw std::domain_error("interval division by zero-straddling interval");
  const RatInterval inv(Rational(1) / o.hi, Rational(1) / o.lo);
  return *this * inv;
}

RatInterval e_interval(unsigned terms) {
  Rational s = 0;
  BigInt fact = 1;
  for (unsigned k = 0; k <= terms; ++k) {
    if (k > 0) fact *= k;
    s += make_rat(1, fact);
  }
  // tail: sum_{k>T} 1/k! < 2/(T+1)!
  const Rational tail = make_rat(2, fact * (terms + 1));
  return {s, s + tail};
}

namespace {

// arctan(1/x) with alternating series; truncation bracketed by consecutive sums.
RatInterval arctan_inv(unsigned long x, unsigned terms) {
  Rational s = 0;
  RatInterval out;
  BigInt xpow = x;  // x^(2k+1)
  bool low_set = false, high_set = false;
  Rational lo, hi;
  for (unsigned k = 0; k <= terms + 1; ++k) {
    const Rational term = make_rat(1, xpow * (2 * k + 1));
    if (k % 2 == 0)
      s += term;
    else
      s -= term;
    // after an even-index (positive) term s is an upper bound, after odd a lower bound
    if (k % 2 == 0) {
      hi = s;
      high_set = true;
    } else {
      lo = s;
      low_set = true;
    }
    xpow *= static_cast<unsigned long>(x) * x;
  }
  if (!low_set || !high_set) throw std::logic_error("arctan series too short");
  return {lo, hi};
}

}  // namespace

RatInterval pi_interval(unsigned terms) {
  const RatInterval a5 = arctan_inv(5, terms);
  const RatInterval a239 = arctan_inv(239, terms);
  const RatInterval sixteen = RatInterval::exact(16), four = RatInterval::exact(4);
  return sixteen * a5 - four * a239;
}

RatInterval sqrt_interval(const Rational& x, unsigned bits) {
  if (x < 0) throw std::domain_error("sqrt of negative");
  if (x == 0) return RatInterval::exact(0);
  // sqrt(p/q) = sqrt(p*q)/q; scale by 4^bits for resolution
  const BigInt p = x.get_num(), q = x.get_den();
  BigInt scaled = p * q;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  BigInt denom = q;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), bits);
  return {make_rat(root, denom), make_rat(root + 1, denom)};
}

RatInterval sqrt_interval(const RatInterval& x, unsigned bits) {
  return {sqrt_interval(x.lo, bits).lo, sqrt_interval(x.hi, bits).hi};
}

RatInterval pow_interval(const RatInterval& base, unsigned long e) {
  if (base.lo < 0) throw std::domain_error("pow_interval: negative base");
  Rational lo = 1, hi = 1;
  Rational bl = base.lo, bh = base.hi;
  unsigned long k = e;
  while (k) {
    if (k & 1) {
      lo *= bl;
      hi *= bh;
    }
    bl *= bl;
    bh *= bh;
    k >>= 1;
  }
  return {lo, hi};
}

namespace {

// 2^(f / 2^s) for 0 <= f <= 2^s, as a product of enclosures of 2^(1/2^k).
RatInterval pow2_fraction(unsigned long f, unsigned s, unsigned bits) {
  // roots[k] encloses 2^(1 / 2^k)
  std::vector<RatInterval> roots(s + 1);
  roots[0] = RatInterval::exact(2);
  for (unsigned k = 1; k <= s; ++k) roots[k] = sqrt_interval(roots[k - 1], bits);
  RatInterval out = RatInterval::exact(1);
  for (unsigned i = 0; i <= s; ++i) {
    if ((f >> i) & 1ul) out = out * roots[s - i];
  }
  return out;
}

// 2^x for a single rational exponent of either sign.
RatInterval pow2_rational_point(const Rational& x, unsigned bits) {
  const unsigned s = 32;
  // split x = ip + frac with 0 <= frac < 1
  BigInt ip, rem;
  mpz_fdiv_qr(ip.get_mpz_t(), rem.get_mpz_t(), x.get_num().get_mpz_t(),
              x.get_den().get_mpz_t());
  const Rational frac = make_rat(rem, x.get_den());
  // dyadic bracket of frac at resolution 2^-s
  BigInt scaled = frac.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), s);
  BigInt fl, r;
  mpz_fdiv_qr(fl.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), frac.get_den().get_mpz_t());
  const unsigned long f_lo = mpz_get_ui(fl.get_mpz_t());
  const unsigned long f_hi = f_lo + (r != 0 ? 1 : 0);
  RatInterval fpart{pow2_fraction(f_lo, s, bits).lo, pow2_fraction(f_hi, s, bits).hi};
  // exact 2^ip factor
  Rational scale;
  if (ip >= 0) {
    BigInt t = 1;
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), mpz_get_ui(ip.get_mpz_t()));
    scale = Rational(t);
  } else {
    BigInt t = 1;
    BigInt mip = -ip;
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), mpz_get_ui(mip.get_mpz_t()));
    scale = make_rat(1, t);
  }
  return fpart * RatInterval::exact(scale);
}

}  // namespace

RatInterval pow2_interval(const RatInterval& exponent, unsigned bits) {
  const RatInterval lo = pow2_rational_point(exponent.lo, bits);
  const RatInterval hi = pow2_rational_point(exponent.hi, bits);
  return {lo.lo, hi.hi};
}

}  // namespace covernum
