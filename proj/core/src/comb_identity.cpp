#include "cesaro/comb_identity.hpp"

#include "cesaro/arith.hpp"

namespace cesaro {

ACoefficients a_coefficients(const Signature& sig) {
  return ACoefficients{sig, one_minus_product_poly(sig.parts())};
}

CombAverageStats combinatorial_average_stats(const Sieve& sieve, const Signature& sig,
                                             std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("combinatorial_average: n must be positive");
  }
  if (n > sieve.limit()) {
    throw std::out_of_range("combinatorial_average: n exceeds sieve limit");
  }

  ACoefficients ac = a_coefficients(sig);
  std::vector<std::uint32_t> support;
  for (std::size_t k = 1; k < ac.coeff.size(); ++k) {
    if (ac.coeff[k] != 0) support.push_back(static_cast<std::uint32_t>(k));
  }

  // total accumulates sum over radicals q of
  //   (-1)^{omega(q)} * floor(n/q) * sum_{vectors alpha} prod_i a_{alpha_i} p_i^{-alpha_i};
  // the inner sum runs over exponent vectors with entries in the support of
  // a, which is exactly the sum of (1/r) a(r) over r with radical q.
  Rational total = 0;
  std::uint64_t visited = 0;

  std::vector<std::uint32_t> primes;
  std::vector<std::size_t> idx;
  for (std::uint64_t q = 2; q <= n; ++q) {
    if (!sieve.is_squarefree(q)) continue;
    primes.clear();
    sieve.for_each_distinct_prime(q, [&](std::uint32_t p) { primes.push_back(p); });
    const std::size_t s = primes.size();

    Rational inner = 0;
    idx.assign(s, 0);
    while (true) {
      BigInt num = 1;
      BigInt den = 1;
      for (std::size_t i = 0; i < s; ++i) {
        std::uint32_t alpha = support[idx[i]];
        num *= ac.coeff[alpha];
        den *= big_pow(BigInt(primes[i]), alpha);
      }
      inner += Rational(num, den);
      ++visited;

      std::size_t i = 0;
      while (i < s && ++idx[i] == support.size()) {
        idx[i] = 0;
        ++i;
      }
      if (i == s) break;
    }

    if (s % 2 == 1) inner = -inner;
    total += inner * BigInt(n / q);
  }

  Rational value = 1 + total / BigInt(n);
  return CombAverageStats{std::move(value), visited};
}

Rational combinatorial_average(const Sieve& sieve, const Signature& sig,
                               std::uint64_t n) {
  return combinatorial_average_stats(sieve, sig, n).value;
}

bool verify_identity(const Sieve& sieve, const Signature& sig, std::uint64_t n_max) {
  if (n_max == 0) {
    throw std::invalid_argument("verify_identity: n_max must be positive");
  }
  if (n_max > sieve.limit()) {
    throw std::out_of_range("verify_identity: n_max exceeds sieve limit");
  }

  Rational direct_sum = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    direct_sum += phi_tilde_sig(sieve, sig, n);
    Rational direct_mean = direct_sum / BigInt(n);
    if (combinatorial_average(sieve, sig, n) != direct_mean) {
      return false;
    }
  }
  return true;
}

}  // namespace cesaro
