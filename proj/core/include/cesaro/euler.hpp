#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "cesaro/numeric.hpp"
#include "cesaro/sieve.hpp"
#include "cesaro/signature.hpp"

namespace cesaro {

// Interval certificate [value - abs_error, value + abs_error] guaranteed to
// contain the exact limit being approximated.
struct Enclosure {
  double value = 0.0;
  double abs_error = 0.0;

  double lower() const { return value - abs_error; }
  double upper() const { return value + abs_error; }
  bool contains(double x) const { return std::abs(x - value) <= abs_error; }
};

// Exact integer coefficients of the factor polynomial
//   f(t) = 1 - t * (1 - prod_j (1 - t^{i_j})),
// coefficient of t^k at index k. degree() = 1 + sum of parts, f(0) = 1.
struct LimitPolynomial {
  Signature sig;
  std::vector<BigInt> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
};

LimitPolynomial limit_polynomial(const Signature& sig);

// f(t) evaluated exactly. Throws std::domain_error for t outside [0, 1].
// For t in [0, 1/2] the value always lies in [1/2, 1]: the subtracted term
// t * (1 - prod) is at most t because the product stays in [0, 1].
Rational f_sig(const Signature& sig, const Rational& t);

// Certified value of the limit mean: the infinite product over all primes
// of f(1/p).
//
// Truncation. The computed value keeps p <= cutoff. Each omitted factor
// satisfies, with m = min part and l = number of parts,
//   1 - f(1/p) = (1/p) * (1 - prod_j (1 - p^{-i_j})) <= sum_j p^{-(1+i_j)}
//             <= l * p^{-(1+m)},
// using 1 - prod(1 - x_j) <= sum x_j for x_j in [0, 1]. Summing over p >
// cutoff and comparing with the integral of x^{-(1+m)}:
//   sum_{p > P} (1 - f(1/p)) <= l * sum_{n > P} n^{-(1+m)}
//                            <= l * integral_P^inf x^{-(1+m)} dx = l * P^{-m} / m.
// Since all factors lie in (0, 1], dropping them can only raise the product,
// and prod_{p > P} f(1/p) >= 1 - sum_{p > P} (1 - f(1/p)), so the exact
// limit lies within [value * (1 - l * P^{-m} / m), value]. The enclosure is
// centered at the partial product with abs_error = value * tail + rounding,
// which contains that interval. The same split over [P, P'] shows the bound
// telescopes, which is what makes enclosures at nested cutoffs nest.
//
// Rounding. Factors are evaluated with an exactly compensated final
// subtraction (Fast2Sum of 1 and t*(1 - prod)) and the running product is
// kept in hi+lo form with FMA-compensated multiplies. Every term of the
// factor evaluation error that is not compensated carries a factor t = 1/p
// (powers of t, and the inner product's rounding enters multiplied by t),
// so the per-factor relative error is bounded by c_l * eps / p with
// c_l = 4 * (l + sum_j log2(i_j + 1)) + 8. Summing over p <= 2^32 gives
// sum 1/p < 3.4 (Mertens), so the total relative rounding error is below
// (4 * c_l + 16) * eps independently of the cutoff. That constant-in-P bound
// is what preserves the nesting of enclosures even when the truncation tail
// is negligible.
//
// Throws std::invalid_argument for cutoff < 2 and std::out_of_range when
// cutoff exceeds sieve.limit().
Enclosure phi_limit(const Sieve& sieve, const Signature& sig, std::uint64_t cutoff);

// Certified values for the whole family sig^m, m = 1..m_max, where sig^m
// repeats every part m times, in a single pass over the primes. Entry m-1
// holds the enclosure for sig^m. Behaves like phi_limit applied to each
// power; the per-power tail bound is (l * m) * P^{-m_min} / m_min.
std::vector<Enclosure> phi_limit_powers(const Sieve& sieve, const Signature& sig,
                                        unsigned m_max, std::uint64_t cutoff);

// Cesaro constant of the normalized determinant-1 family: exact 1 for
// k = 1, otherwise the limit mean for signature (2, ..., k).
Enclosure c1(const Sieve& sieve, std::uint32_t k, std::uint64_t cutoff);

// Cesaro constant of the invertible family: the limit mean for signature
// (1, ..., k). Factor-wise it is at most c1's value, since the extra part
// only shrinks each factor.
Enclosure c2(const Sieve& sieve, std::uint32_t k, std::uint64_t cutoff);

}  // namespace cesaro
