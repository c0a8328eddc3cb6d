#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace covernum {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt pow_big(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline BigInt pow2(unsigned long e) { return pow_big(2, e); }

// Exact quotient; throws if b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::runtime_error("exact_div: not divisible");
  return q;
}

inline Rational make_rat(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" with reduced terms, or just "p" for integers.
inline std::string rat_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rat_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

// Smallest k with 2^k >= n (n >= 1); integer stand-in for log2 upper bounds.
inline unsigned ceil_log2(unsigned long n) {
  unsigned k = 0;
  unsigned long v = 1;
  while (v < n) {
    v <<= 1;
    ++k;
  }
  return k;
}

}  // namespace covernum
