#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cesaro/numeric.hpp"
#include "cesaro/sieve.hpp"
#include "cesaro/signature.hpp"

namespace cesaro {

// phi_tilde_k(n) = prod_{p | n} (1 - p^{-k}), exactly. Depends on n only
// through its radical and is multiplicative on coprime arguments.
Rational phi_tilde_k(const Sieve& sieve, std::uint32_t k, std::uint64_t n);

// prod over the signature parts of phi_tilde_{i_j}(n).
Rational phi_tilde_sig(const Sieve& sieve, const Signature& sig, std::uint64_t n);

// Number of invertible k x k matrices over Z_n, computed as the exact
// rational n^{k^2} * prod_{i=1..k} phi_tilde_i(n). The product is an
// integer; the implementation asserts the reduced denominator is 1.
BigInt gl_order(const Sieve& sieve, std::uint32_t k, std::uint64_t n);

// Number of determinant-1 matrices: n^{k^2 - 1} * prod_{i=2..k}
// phi_tilde_i(n) for k >= 2, and 1 for k = 1 (the only 1 x 1 matrix of
// determinant 1 is (1)).
BigInt sl_order(const Sieve& sieve, std::uint32_t k, std::uint64_t n);

// Exhaustive counts over all n^{k^2} matrices, used as oracles for the
// closed forms above. A matrix is counted for GL when gcd(det, n) = 1 and
// for SL when det = 1 mod n. Throws std::length_error when n^{k^2} exceeds
// the budget. threads > 1 partitions the index range; the count is exact
// either way.
std::uint64_t brute_force_gl_order(std::uint32_t k, std::uint64_t n,
                                   std::uint64_t budget = 100'000'000,
                                   unsigned threads = 1);
std::uint64_t brute_force_sl_order(std::uint32_t k, std::uint64_t n,
                                   std::uint64_t budget = 100'000'000,
                                   unsigned threads = 1);

// Double-precision phi_tilde_sig evaluator for long scans. Prime weights
// w_p = prod_j (1 - p^{-i_j}) are precomputed densely for all p <= limit,
// so one evaluation costs one spf chase times one multiply per distinct
// prime. Values agree with the exact rational path to a few ulps; the
// property suite checks this on random inputs.
class PhiEvaluator {
 public:
  // limit bounds the arguments this evaluator accepts; it must not exceed
  // sieve.limit(). The sieve reference must outlive the evaluator.
  PhiEvaluator(const Sieve& sieve, Signature sig, std::uint64_t limit);

  double operator()(std::uint64_t n) const {
    if (n == 0 || n > limit_) {
      throw std::out_of_range("PhiEvaluator: argument outside [1, limit]");
    }
    std::uint64_t m = n;
    double w = 1.0;
    while (m > 1) {
      std::uint32_t p = spf_[m];
      w *= weight_[p];
      while (m % p == 0) m /= p;
    }
    return w;
  }

  const Signature& signature() const { return sig_; }
  std::uint64_t limit() const { return limit_; }

 private:
  const Sieve* sieve_;
  Signature sig_;
  std::uint64_t limit_;
  std::span<const std::uint32_t> spf_;
  std::vector<double> weight_;
};

}  // namespace cesaro
