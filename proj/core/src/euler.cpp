#include "cesaro/euler.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace cesaro {

LimitPolynomial limit_polynomial(const Signature& sig) {
  // f(t) = 1 - t * A(t) where A(t) = 1 - prod_j (1 - t^{i_j}).
  std::vector<BigInt> a = one_minus_product_poly(sig.parts());
  std::vector<BigInt> coeffs(a.size() + 1);
  coeffs[0] = 1;
  for (std::size_t k = 1; k < a.size(); ++k) coeffs[k + 1] = -a[k];
  // a[0] = 0 and a[1] contributes to t^2, so coeffs[1] stays 0 unless
  // shifted: f = 1 - sum_k a_k t^{k+1}.
  return LimitPolynomial{sig, std::move(coeffs)};
}

Rational f_sig(const Signature& sig, const Rational& t) {
  if (t < 0 || t > 1) {
    throw std::domain_error("f_sig: t must lie in [0, 1]");
  }
  Rational prod = 1;
  for (std::uint32_t i : sig.parts()) {
    prod *= 1 - rational_pow(t, i);
  }
  return 1 - t * (1 - prod);
}

namespace {

// Running product in hi + lo form. Factors arrive as exact two-term sums
// f_hi + f_lo; the multiply uses an FMA to capture the rounding of hi*f_hi
// and folds everything else into lo, where the neglected pieces are
// O(eps^2) relative to the product.
struct CompensatedProduct {
  double hi = 1.0;
  double lo = 0.0;

  void multiply(double f_hi, double f_lo) {
    double p = hi * f_hi;
    double err = std::fma(hi, f_hi, -p);
    lo = lo * f_hi + hi * f_lo + err;
    hi = p;
  }

  double value() const { return hi + lo; }
};

// One factor f(1/p) = 1 - x with x = t * (1 - prod_j (1 - t^{i_j})),
// returned as an exact Fast2Sum pair: since 0 <= x <= 1/2 <= 1, the pair
// (hi, lo) with hi = fl(1 - x), lo = (1 - hi) - x represents 1 - x exactly
// up to the rounding already inside x. The inner product's own rounding is
// damped by the outer multiplication with t = 1/p.
struct FactorParts {
  double hi;
  double lo;
};

FactorParts factor_at_prime(const std::vector<std::uint32_t>& parts, double p) {
  double t = 1.0 / p;
  double prod = 1.0;
  for (std::uint32_t i : parts) {
    prod *= 1.0 - pow_int(t, i);
  }
  double x = t * (1.0 - prod);
  double hi = 1.0 - x;
  double lo = (1.0 - hi) - x;
  return {hi, lo};
}

double ops_per_factor_bound(const Signature& sig) {
  double c = 0.0;
  for (std::uint32_t i : sig.parts()) {
    c += std::log2(static_cast<double>(i) + 1.0);
  }
  return 4.0 * (static_cast<double>(sig.size()) + c) + 8.0;
}

void check_cutoff(const Sieve& sieve, std::uint64_t cutoff) {
  if (cutoff < 2) {
    throw std::invalid_argument("phi_limit: cutoff must be at least 2");
  }
  if (cutoff > sieve.limit()) {
    throw std::out_of_range("phi_limit: cutoff exceeds the sieve's prime table");
  }
}

double tail_bound(const Signature& sig, unsigned repeat, std::uint64_t cutoff) {
  double m = static_cast<double>(sig.min_part());
  double l = static_cast<double>(sig.size()) * static_cast<double>(repeat);
  return l * std::pow(static_cast<double>(cutoff), -m) / m;
}

}  // namespace

Enclosure phi_limit(const Sieve& sieve, const Signature& sig, std::uint64_t cutoff) {
  check_cutoff(sieve, cutoff);

  CompensatedProduct product;
  for (std::uint32_t p : sieve.primes()) {
    if (p > cutoff) break;
    FactorParts f = factor_at_prime(sig.parts(), static_cast<double>(p));
    product.multiply(f.hi, f.lo);
  }

  double value = product.value();
  const double eps = std::numeric_limits<double>::epsilon();
  double rounding = value * eps * (4.0 * ops_per_factor_bound(sig) + 16.0);
  double tail = value * tail_bound(sig, 1, cutoff);
  return Enclosure{value, tail + rounding};
}

std::vector<Enclosure> phi_limit_powers(const Sieve& sieve, const Signature& sig,
                                        unsigned m_max, std::uint64_t cutoff) {
  check_cutoff(sieve, cutoff);
  if (m_max == 0) {
    throw std::invalid_argument("phi_limit_powers: m_max must be positive");
  }

  std::vector<CompensatedProduct> products(m_max);
  for (std::uint32_t p : sieve.primes()) {
    if (p > cutoff) break;
    double t = 1.0 / static_cast<double>(p);
    double g = 1.0;
    for (std::uint32_t i : sig.parts()) {
      g *= 1.0 - pow_int(t, i);
    }
    double gm = 1.0;
    for (unsigned m = 0; m < m_max; ++m) {
      gm *= g;
      double x = t * (1.0 - gm);
      double hi = 1.0 - x;
      double lo = (1.0 - hi) - x;
      products[m].multiply(hi, lo);
    }
  }

  const double eps = std::numeric_limits<double>::epsilon();
  double ops = ops_per_factor_bound(sig);
  std::vector<Enclosure> result(m_max);
  for (unsigned m = 0; m < m_max; ++m) {
    double value = products[m].value();
    // The g^m power chain adds up to m extra multiplies per factor, each
    // damped by t like the rest of the inner product's rounding.
    double rounding = value * eps * (4.0 * (ops + static_cast<double>(m + 1)) + 16.0);
    double tail = value * tail_bound(sig, m + 1, cutoff);
    result[m] = Enclosure{value, tail + rounding};
  }
  return result;
}

Enclosure c1(const Sieve& sieve, std::uint32_t k, std::uint64_t cutoff) {
  if (k == 0) {
    throw std::invalid_argument("c1: k must be positive");
  }
  if (k == 1) {
    return Enclosure{1.0, 0.0};
  }
  std::vector<std::uint32_t> parts;
  for (std::uint32_t i = 2; i <= k; ++i) parts.push_back(i);
  return phi_limit(sieve, Signature(std::move(parts)), cutoff);
}

Enclosure c2(const Sieve& sieve, std::uint32_t k, std::uint64_t cutoff) {
  if (k == 0) {
    throw std::invalid_argument("c2: k must be positive");
  }
  std::vector<std::uint32_t> parts;
  for (std::uint32_t i = 1; i <= k; ++i) parts.push_back(i);
  return phi_limit(sieve, Signature(std::move(parts)), cutoff);
}

}  // namespace cesaro
