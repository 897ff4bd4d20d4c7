#include "cesaro/arith.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace cesaro {

Rational phi_tilde_k(const Sieve& sieve, std::uint32_t k, std::uint64_t n) {
  if (k == 0) {
    throw std::invalid_argument("phi_tilde_k: k must be positive");
  }
  Rational result = 1;
  sieve.for_each_distinct_prime(n, [&](std::uint32_t p) {
    BigInt pk = big_pow(BigInt(p), k);
    result *= Rational(pk - 1, pk);
  });
  return result;
}

Rational phi_tilde_sig(const Sieve& sieve, const Signature& sig, std::uint64_t n) {
  Rational result = 1;
  sieve.for_each_distinct_prime(n, [&](std::uint32_t p) {
    for (std::uint32_t k : sig.parts()) {
      BigInt pk = big_pow(BigInt(p), k);
      result *= Rational(pk - 1, pk);
    }
  });
  return result;
}

namespace {

BigInt order_from_phi_product(const Sieve& sieve, std::uint64_t n,
                              std::uint32_t exponent, std::uint32_t k_lo,
                              std::uint32_t k_hi) {
  Rational r = Rational(big_pow(BigInt(n), exponent));
  for (std::uint32_t i = k_lo; i <= k_hi; ++i) {
    r *= phi_tilde_k(sieve, i, n);
  }
  if (denominator(r) != 1) {
    throw std::logic_error("group order is not an integer");
  }
  return numerator(r);
}

}  // namespace

BigInt gl_order(const Sieve& sieve, std::uint32_t k, std::uint64_t n) {
  if (k == 0) {
    throw std::invalid_argument("gl_order: k must be positive");
  }
  return order_from_phi_product(sieve, n, k * k, 1, k);
}

BigInt sl_order(const Sieve& sieve, std::uint32_t k, std::uint64_t n) {
  if (k == 0) {
    throw std::invalid_argument("sl_order: k must be positive");
  }
  if (k == 1) {
    // Touch the sieve range check so out-of-range n fails like the k >= 2 path.
    (void)sieve.radical(n);
    return 1;
  }
  return order_from_phi_product(sieve, n, k * k - 1, 2, k);
}

namespace {

// Integer determinant of a k x k matrix by cofactor expansion along the
// first remaining row. Entries are residues < n, so with the enumeration
// budget capping n^{k^2} <= ~1e8 the largest intermediate is k! * (n-1)^k,
// far below the int64 range.
std::int64_t det_cofactor(const std::int64_t* m, const int* cols, int k, int stride) {
  if (k == 1) return m[cols[0]];
  if (k == 2) return m[cols[0]] * m[stride + cols[1]] - m[cols[1]] * m[stride + cols[0]];
  std::int64_t det = 0;
  std::array<int, 16> sub{};
  for (int j = 0; j < k; ++j) {
    int idx = 0;
    for (int c = 0; c < k; ++c) {
      if (c != j) sub[idx++] = cols[c];
    }
    std::int64_t minor = det_cofactor(m + stride, sub.data(), k - 1, stride);
    std::int64_t term = m[cols[j]] * minor;
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

struct BruteForceCounts {
  std::uint64_t gl = 0;
  std::uint64_t sl = 0;
};

// Counts invertible and determinant-1 matrices over the linear index range
// [begin, end), where an index encodes the k^2 entries as base-n digits.
BruteForceCounts count_range(std::uint32_t k, std::uint64_t n, std::uint64_t begin,
                             std::uint64_t end) {
  const int kk = static_cast<int>(k * k);
  std::array<std::int64_t, 25> entries{};
  std::array<int, 5> cols{};
  for (int i = 0; i < static_cast<int>(k); ++i) cols[i] = i;

  // Decode the starting index into digits (entry 0 is the fastest digit).
  std::uint64_t idx = begin;
  for (int i = 0; i < kk; ++i) {
    entries[i] = static_cast<std::int64_t>(idx % n);
    idx /= n;
  }

  BruteForceCounts counts;
  for (std::uint64_t cur = begin; cur < end; ++cur) {
    std::int64_t det = det_cofactor(entries.data(), cols.data(), static_cast<int>(k),
                                    static_cast<int>(k));
    std::uint64_t d = static_cast<std::uint64_t>(((det % static_cast<std::int64_t>(n)) +
                                                  static_cast<std::int64_t>(n)) %
                                                 static_cast<std::int64_t>(n));
    if (std::gcd(d, n) == 1) ++counts.gl;
    if (d == 1 % n) ++counts.sl;

    // Odometer increment.
    for (int i = 0; i < kk; ++i) {
      if (++entries[i] < static_cast<std::int64_t>(n)) break;
      entries[i] = 0;
    }
  }
  return counts;
}

BruteForceCounts brute_force_counts(std::uint32_t k, std::uint64_t n,
                                    std::uint64_t budget, unsigned threads) {
  if (k == 0 || n == 0) {
    throw std::invalid_argument("brute force: k and n must be positive");
  }
  if (k > 5) {
    throw std::invalid_argument("brute force: k larger than 5 always exceeds any sane budget");
  }

  // total = n^(k^2), rejecting overflow against the budget as we go.
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < k * k; ++i) {
    if (n != 0 && total > budget / n) {
      throw std::length_error("brute force: n^(k^2) exceeds enumeration budget");
    }
    total *= n;
  }
  if (total > budget) {
    throw std::length_error("brute force: n^(k^2) exceeds enumeration budget");
  }

  if (threads <= 1 || total < 1024) {
    return count_range(k, n, 0, total);
  }

  unsigned t = std::min<unsigned>(threads, std::thread::hardware_concurrency());
  if (t == 0) t = 1;
  std::vector<BruteForceCounts> partial(t);
  std::vector<std::thread> workers;
  workers.reserve(t);
  for (unsigned w = 0; w < t; ++w) {
    std::uint64_t begin = total / t * w + std::min<std::uint64_t>(w, total % t);
    std::uint64_t end = total / t * (w + 1) + std::min<std::uint64_t>(w + 1, total % t);
    workers.emplace_back(
        [&, w, begin, end] { partial[w] = count_range(k, n, begin, end); });
  }
  for (auto& th : workers) th.join();

  BruteForceCounts counts;
  for (const auto& p : partial) {
    counts.gl += p.gl;
    counts.sl += p.sl;
  }
  return counts;
}

}  // namespace

std::uint64_t brute_force_gl_order(std::uint32_t k, std::uint64_t n,
                                   std::uint64_t budget, unsigned threads) {
  return brute_force_counts(k, n, budget, threads).gl;
}

std::uint64_t brute_force_sl_order(std::uint32_t k, std::uint64_t n,
                                   std::uint64_t budget, unsigned threads) {
  return brute_force_counts(k, n, budget, threads).sl;
}

PhiEvaluator::PhiEvaluator(const Sieve& sieve, Signature sig, std::uint64_t limit)
    : sieve_(&sieve), sig_(std::move(sig)), limit_(limit), spf_(sieve.spf_table()) {
  if (limit == 0 || limit > sieve.limit()) {
    throw std::out_of_range("PhiEvaluator: limit outside [1, sieve limit]");
  }
  weight_.assign(limit + 1, 1.0);
  for (std::uint32_t p : sieve.primes()) {
    if (p > limit) break;
    double w = 1.0;
    for (std::uint32_t k : sig_.parts()) {
      w *= 1.0 - pow_int(1.0 / p, k);
    }
    weight_[p] = w;
  }
}

}  // namespace cesaro
