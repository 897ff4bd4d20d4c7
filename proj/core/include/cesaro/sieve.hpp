#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cesaro {

struct PrimePower {
  std::uint32_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with primes strictly ascending and exponents >= 1.
// factorize(1) yields an empty factor list.
struct Factorization {
  std::vector<PrimePower> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Smallest-prime-factor table built by a linear (Euler) sieve: each composite
// is crossed off exactly once, so construction is O(limit). Immutable after
// construction; all queries are safe to call concurrently.
class Sieve {
 public:
  // Throws std::invalid_argument for limit = 0 or limit >= 2^32 (the spf
  // entries are 32-bit).
  explicit Sieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }

  // n in [2, limit].
  std::uint32_t smallest_prime_factor(std::uint64_t n) const;

  // n in [1, limit].
  bool is_prime(std::uint64_t n) const;

  // n in [1, limit]. Factors come out ascending because spf chasing peels
  // the smallest prime first.
  Factorization factorize(std::uint64_t n) const;

  // Product of the distinct primes of n; radical(1) = 1.
  std::uint64_t radical(std::uint64_t n) const;

  // True when no prime divides n twice.
  bool is_squarefree(std::uint64_t n) const;

  // Ascending primes <= bound; bound must not exceed limit.
  std::vector<std::uint32_t> primes_up_to(std::uint64_t bound) const;

  // All primes <= limit, ascending, without copying.
  std::span<const std::uint32_t> primes() const { return primes_; }

  // Raw spf table, indexed 0..limit. Entries 0 and 1 are 0. Hot loops chase
  // factors through this span directly instead of paying a call per step.
  std::span<const std::uint32_t> spf_table() const { return spf_; }

  std::size_t prime_count(std::uint64_t bound) const;

  // Calls fn(prime) for each distinct prime of n, ascending.
  template <typename Fn>
  void for_each_distinct_prime(std::uint64_t n, Fn&& fn) const {
    check_range(n);
    std::uint64_t m = n;
    while (m > 1) {
      std::uint32_t p = spf_[m];
      fn(p);
      while (m % p == 0) m /= p;
    }
  }

 private:
  void check_range(std::uint64_t n) const;

  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

}  // namespace cesaro
