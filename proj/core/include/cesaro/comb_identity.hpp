#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cesaro/numeric.hpp"
#include "cesaro/sieve.hpp"
#include "cesaro/signature.hpp"

namespace cesaro {

// Integer coefficients a_k of the expansion
//   sum_{k>=1} a_k t^k = 1 - prod_j (1 - t^{i_j}),
// the exact combinatorial engine behind the closed form for partial means of
// the signature's multiplicative mean function. coeff[k] holds a_k for
// k = 1..degree; coeff[0] = 0 and degree = sum of parts.
struct ACoefficients {
  Signature sig;
  std::vector<BigInt> coeff;

  std::size_t degree() const { return coeff.size() - 1; }
};

ACoefficients a_coefficients(const Signature& sig);

// One term of the exact partial-mean expansion, indexed by an integer r > 1
// whose prime exponents all lie in [1, degree]:
//   contribution = (1/r) * (-1)^pr * a_of_r * b,
// with pr the number of distinct primes of r, a_of_r = prod_i a_{alpha_i}
// over r = prod_i p_i^{alpha_i}, and b = floor(n / rad(r)) / n.
struct RTerm {
  BigInt r;
  Factorization factorization;
  unsigned pr = 0;
  BigInt a_of_r;
  Rational b;
};

// Enumerates every r term with nonzero a_of_r and rad(r) <= n: squarefree
// radicals q <= n first (through the sieve), then exponent vectors over q's
// primes with entries in the support of a. Terms with a_of_r = 0 are never
// visited because the vector entries range over the support only.
template <typename Fn>
void for_each_r_term(const Sieve& sieve, const Signature& sig, std::uint64_t n,
                     Fn&& fn) {
  if (n == 0) {
    throw std::invalid_argument("for_each_r_term: n must be positive");
  }
  if (n > sieve.limit()) {
    throw std::out_of_range("for_each_r_term: n exceeds sieve limit");
  }

  ACoefficients ac = a_coefficients(sig);
  std::vector<std::uint32_t> support;
  for (std::size_t k = 1; k < ac.coeff.size(); ++k) {
    if (ac.coeff[k] != 0) support.push_back(static_cast<std::uint32_t>(k));
  }

  std::vector<std::uint32_t> primes;
  std::vector<std::size_t> idx;
  for (std::uint64_t q = 2; q <= n; ++q) {
    if (!sieve.is_squarefree(q)) continue;
    primes.clear();
    sieve.for_each_distinct_prime(q, [&](std::uint32_t p) { primes.push_back(p); });
    const std::size_t s = primes.size();
    const Rational b(BigInt(n / q), BigInt(n));

    idx.assign(s, 0);
    while (true) {
      RTerm term;
      term.pr = static_cast<unsigned>(s);
      term.r = 1;
      term.a_of_r = 1;
      term.b = b;
      term.factorization.factors.reserve(s);
      for (std::size_t i = 0; i < s; ++i) {
        std::uint32_t alpha = support[idx[i]];
        term.r *= big_pow(BigInt(primes[i]), alpha);
        term.a_of_r *= ac.coeff[alpha];
        term.factorization.factors.push_back({primes[i], alpha});
      }
      fn(term);

      std::size_t i = 0;
      while (i < s && ++idx[i] == support.size()) {
        idx[i] = 0;
        ++i;
      }
      if (i == s) break;
    }
  }
}

// Exact partial mean via the expansion:
//   (1/n) sum_{m<=n} phi_tilde_sig(m) = 1 + sum_r (1/r) (-1)^pr a_of_r * b.
// Throws std::out_of_range when n exceeds the sieve limit.
Rational combinatorial_average(const Sieve& sieve, const Signature& sig,
                               std::uint64_t n);

struct CombAverageStats {
  Rational value;
  std::uint64_t terms_visited = 0;
};

CombAverageStats combinatorial_average_stats(const Sieve& sieve, const Signature& sig,
                                             std::uint64_t n);

// Checks the expansion against the directly accumulated mean of
// phi_tilde_sig for every n <= n_max, both sides exact rationals compared
// with operator==. Returns true when every n matches.
bool verify_identity(const Sieve& sieve, const Signature& sig, std::uint64_t n_max);

}  // namespace cesaro
