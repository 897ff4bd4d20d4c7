#include "cesaro/arith.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

namespace {

using cesaro::BigInt;
using cesaro::PhiEvaluator;
using cesaro::Rational;
using cesaro::Sieve;
using cesaro::Signature;

TEST(PhiTildeTest, HandComputedValues) {
  Sieve sieve(100);
  // 12 = 2^2 * 3: (1 - 1/2)(1 - 1/3) = 1/3.
  EXPECT_EQ(cesaro::phi_tilde_k(sieve, 1, 12), Rational(1, 3));
  // (1 - 1/4)(1 - 1/9) = 3/4 * 8/9 = 2/3.
  EXPECT_EQ(cesaro::phi_tilde_k(sieve, 2, 12), Rational(2, 3));
  EXPECT_EQ(cesaro::phi_tilde_k(sieve, 1, 1), Rational(1));
  EXPECT_EQ(cesaro::phi_tilde_k(sieve, 3, 2), Rational(7, 8));

  // Signature (1,2) at n = 6: (1/2)(2/3) * (3/4)(8/9) = 1/3 * 2/3 = 2/9.
  EXPECT_EQ(cesaro::phi_tilde_sig(sieve, Signature::parse("1,2"), 6), Rational(2, 9));
  EXPECT_EQ(cesaro::phi_tilde_sig(sieve, Signature::parse("1"), 6), Rational(1, 3));
}

TEST(PhiTildeTest, RadicalDependenceSpotChecks) {
  Sieve sieve(1000);
  Signature sig = Signature::parse("1,2");
  // Same radical, same value.
  EXPECT_EQ(cesaro::phi_tilde_sig(sieve, sig, 12),
            cesaro::phi_tilde_sig(sieve, sig, 6));
  EXPECT_EQ(cesaro::phi_tilde_sig(sieve, sig, 8),
            cesaro::phi_tilde_sig(sieve, sig, 2));
  EXPECT_EQ(cesaro::phi_tilde_k(sieve, 2, 972),
            cesaro::phi_tilde_k(sieve, 2, 6));
}

TEST(PhiTildeTest, PhiTildeOneTimesNIsEulerTotient) {
  Sieve sieve(2000);
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    // Direct totient from the factorization.
    std::uint64_t phi = n;
    sieve.for_each_distinct_prime(n, [&](std::uint32_t p) { phi = phi / p * (p - 1); });
    Rational r = cesaro::phi_tilde_k(sieve, 1, n) * BigInt(n);
    ASSERT_EQ(r, Rational(BigInt(phi))) << "n=" << n;
  }
}

TEST(OrderTest, HandComputedValues) {
  Sieve sieve(100);
  // #GL_1(Z_12) = totient(12) = 4.
  EXPECT_EQ(cesaro::gl_order(sieve, 1, 12), BigInt(4));
  // #GL_2(Z_2) = (4-1)(4-2) = 6.
  EXPECT_EQ(cesaro::gl_order(sieve, 2, 2), BigInt(6));
  // #SL_2(Z_3) = 27 * (1 - 1/9) = 24.
  EXPECT_EQ(cesaro::sl_order(sieve, 2, 3), BigInt(24));
  // #SL_2(Z_2) = #GL_2(Z_2) over the field with two elements.
  EXPECT_EQ(cesaro::sl_order(sieve, 2, 2), BigInt(6));
  // #GL_3(Z_2) = (8-1)(8-2)(8-4) = 168.
  EXPECT_EQ(cesaro::gl_order(sieve, 3, 2), BigInt(168));
  // Trivial group over Z_1.
  EXPECT_EQ(cesaro::gl_order(sieve, 2, 1), BigInt(1));
  EXPECT_EQ(cesaro::sl_order(sieve, 2, 1), BigInt(1));
}

TEST(OrderTest, SlOneIsAlwaysTrivial) {
  Sieve sieve(500);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    ASSERT_EQ(cesaro::sl_order(sieve, 1, n), BigInt(1));
  }
}

TEST(OrderTest, PrimeCaseClosedForm) {
  // Over Z_p the invertible count is prod_{i=0..k-1} (p^k - p^i).
  Sieve sieve(100);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (std::uint32_t k = 1; k <= 4; ++k) {
      BigInt expected = 1;
      BigInt pk = cesaro::big_pow(BigInt(p), k);
      BigInt pi = 1;
      for (std::uint32_t i = 0; i < k; ++i) {
        expected *= pk - pi;
        pi *= p;
      }
      ASSERT_EQ(cesaro::gl_order(sieve, k, p), expected) << "p=" << p << " k=" << k;
    }
  }
}

TEST(OrderTest, DeterminantFibration) {
  Sieve sieve(200);
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      ASSERT_EQ(cesaro::gl_order(sieve, k, n),
                cesaro::sl_order(sieve, k, n) * cesaro::gl_order(sieve, 1, n))
          << "k=" << k << " n=" << n;
    }
  }
}

TEST(BruteForceTest, HandComputedValues) {
  EXPECT_EQ(cesaro::brute_force_gl_order(2, 3), 48u);
  EXPECT_EQ(cesaro::brute_force_gl_order(3, 2), 168u);
  EXPECT_EQ(cesaro::brute_force_gl_order(1, 4), 2u);
  EXPECT_EQ(cesaro::brute_force_sl_order(2, 4), 48u);
  EXPECT_EQ(cesaro::brute_force_sl_order(1, 9), 1u);
  EXPECT_EQ(cesaro::brute_force_gl_order(1, 1), 1u);
  EXPECT_EQ(cesaro::brute_force_sl_order(1, 1), 1u);
}

TEST(BruteForceTest, MatchesClosedFormsSmallRange) {
  Sieve sieve(50);
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::uint32_t k = 1; k <= 2; ++k) {
      ASSERT_EQ(BigInt(cesaro::brute_force_gl_order(k, n)),
                cesaro::gl_order(sieve, k, n))
          << "k=" << k << " n=" << n;
      ASSERT_EQ(BigInt(cesaro::brute_force_sl_order(k, n)),
                cesaro::sl_order(sieve, k, n))
          << "k=" << k << " n=" << n;
    }
  }
  for (std::uint64_t n = 1; n <= 3; ++n) {
    ASSERT_EQ(BigInt(cesaro::brute_force_gl_order(3, n)), cesaro::gl_order(sieve, 3, n));
    ASSERT_EQ(BigInt(cesaro::brute_force_sl_order(3, n)), cesaro::sl_order(sieve, 3, n));
  }
}

TEST(BruteForceTest, ThreadedCountMatchesSequential) {
  EXPECT_EQ(cesaro::brute_force_gl_order(2, 7, 100'000'000, 4),
            cesaro::brute_force_gl_order(2, 7, 100'000'000, 1));
  EXPECT_EQ(cesaro::brute_force_sl_order(2, 10, 100'000'000, 3),
            cesaro::brute_force_sl_order(2, 10, 100'000'000, 1));
}

TEST(BruteForceTest, BudgetEnforced) {
  EXPECT_THROW(cesaro::brute_force_gl_order(2, 101), std::length_error);
  EXPECT_THROW(cesaro::brute_force_gl_order(4, 4), std::length_error);
  EXPECT_THROW(cesaro::brute_force_sl_order(3, 8), std::length_error);
  // Tight custom budget.
  EXPECT_THROW(cesaro::brute_force_gl_order(2, 3, 80), std::length_error);
  EXPECT_EQ(cesaro::brute_force_gl_order(2, 3, 81), 48u);
}

TEST(PhiEvaluatorTest, AgreesWithExactRationalOnRandomInputs) {
  const std::uint64_t limit = 1'000'000;
  Sieve sieve(limit);
  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<std::uint64_t> dist(1, limit);

  for (const char* text : {"1", "2", "1,2", "2,3", "1,2,3"}) {
    Signature sig = Signature::parse(text);
    PhiEvaluator eval(sieve, sig, limit);
    for (int i = 0; i < 2000; ++i) {
      std::uint64_t n = dist(rng);
      double exact = cesaro::phi_tilde_sig(sieve, sig, n).convert_to<double>();
      double fast = eval(n);
      ASSERT_NEAR(fast, exact, 1e-12) << "sig=" << text << " n=" << n;
    }
  }
}

TEST(ArithErrorsTest, InvalidArguments) {
  Sieve sieve(100);
  EXPECT_THROW(cesaro::phi_tilde_k(sieve, 0, 10), std::invalid_argument);
  EXPECT_THROW(cesaro::phi_tilde_k(sieve, 1, 0), std::out_of_range);
  EXPECT_THROW(cesaro::phi_tilde_k(sieve, 1, 101), std::out_of_range);
  EXPECT_THROW(cesaro::gl_order(sieve, 0, 5), std::invalid_argument);
  EXPECT_THROW(cesaro::sl_order(sieve, 1, 101), std::out_of_range);
  EXPECT_THROW(Signature::parse(""), std::invalid_argument);
  EXPECT_THROW(Signature::parse("1,,2"), std::invalid_argument);
  EXPECT_THROW(Signature::parse("1,0"), std::invalid_argument);
  EXPECT_THROW(Signature::parse("a"), std::invalid_argument);
  EXPECT_THROW(PhiEvaluator(sieve, Signature::parse("1"), 101), std::out_of_range);
}

}  // namespace
