#include "cesaro/sieve.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cesaro {

Sieve::Sieve(std::uint64_t limit) : limit_(limit) {
  if (limit == 0) {
    throw std::invalid_argument("Sieve: limit must be at least 1");
  }
  if (limit > 0xFFFFFFFFull) {
    throw std::invalid_argument("Sieve: limit must fit in 32 bits");
  }

  spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes_) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

void Sieve::check_range(std::uint64_t n) const {
  if (n < 1 || n > limit_) {
    throw std::out_of_range("Sieve: argument " + std::to_string(n) +
                            " outside [1, " + std::to_string(limit_) + "]");
  }
}

std::uint32_t Sieve::smallest_prime_factor(std::uint64_t n) const {
  if (n < 2 || n > limit_) {
    throw std::out_of_range("Sieve: smallest_prime_factor needs n in [2, limit]");
  }
  return spf_[n];
}

bool Sieve::is_prime(std::uint64_t n) const {
  check_range(n);
  return n >= 2 && spf_[n] == n;
}

Factorization Sieve::factorize(std::uint64_t n) const {
  check_range(n);
  Factorization f;
  std::uint64_t m = n;
  while (m > 1) {
    std::uint32_t p = spf_[m];
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  return f;
}

std::uint64_t Sieve::radical(std::uint64_t n) const {
  check_range(n);
  std::uint64_t r = 1;
  std::uint64_t m = n;
  while (m > 1) {
    std::uint32_t p = spf_[m];
    r *= p;
    while (m % p == 0) m /= p;
  }
  return r;
}

bool Sieve::is_squarefree(std::uint64_t n) const {
  check_range(n);
  std::uint64_t m = n;
  while (m > 1) {
    std::uint32_t p = spf_[m];
    m /= p;
    if (m % p == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> Sieve::primes_up_to(std::uint64_t bound) const {
  if (bound > limit_) {
    throw std::out_of_range("Sieve: primes_up_to bound exceeds sieve limit");
  }
  auto end = std::upper_bound(primes_.begin(), primes_.end(), bound);
  return std::vector<std::uint32_t>(primes_.begin(), end);
}

std::size_t Sieve::prime_count(std::uint64_t bound) const {
  if (bound > limit_) {
    throw std::out_of_range("Sieve: prime_count bound exceeds sieve limit");
  }
  auto end = std::upper_bound(primes_.begin(), primes_.end(), bound);
  return static_cast<std::size_t>(end - primes_.begin());
}

}  // namespace cesaro
