#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

namespace cesaro {

// Exact arithmetic types. mpq keeps rationals canonical (lowest terms,
// positive denominator), which several identity checks rely on.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
  Rational r = 1;
  Rational b = base;
  while (exp != 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

// Binary powering with nonnegative integer exponent. Deterministic across
// platforms, unlike std::pow with a rounded double exponent.
inline double pow_int(double base, unsigned exp) {
  double r = 1.0;
  double b = base;
  while (exp != 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

// Neumaier variant of Kahan summation. Used by every floating-point scan so
// that accumulated error stays O(eps) per term independent of n_max.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

// Coefficients of 1 - prod_j (1 - t^{i_j}) for parts (i_1, ..., i_l).
// Index k holds the coefficient of t^k; index 0 is always 0 and the degree
// is sum_j i_j. Shared by the limit-polynomial and the combinatorial
// expansion, which are the two faces of the same generating identity.
std::vector<BigInt> one_minus_product_poly(const std::vector<std::uint32_t>& parts);

}  // namespace cesaro
