#include "cesaro/comb_identity.hpp"

#include <gtest/gtest.h>

#include <map>
#include <stdexcept>

#include "cesaro/arith.hpp"

namespace {

using cesaro::BigInt;
using cesaro::Rational;
using cesaro::RTerm;
using cesaro::Sieve;
using cesaro::Signature;

TEST(ACoefficientsTest, SmallSignatures) {
  // (1): 1 - (1 - t) = t.
  auto a1 = cesaro::a_coefficients(Signature::parse("1"));
  ASSERT_EQ(a1.coeff.size(), 2u);
  EXPECT_EQ(a1.coeff[1], BigInt(1));

  // (2): 1 - (1 - t^2) = t^2.
  auto a2 = cesaro::a_coefficients(Signature::parse("2"));
  ASSERT_EQ(a2.coeff.size(), 3u);
  EXPECT_EQ(a2.coeff[1], BigInt(0));
  EXPECT_EQ(a2.coeff[2], BigInt(1));

  // (1,2): t + t^2 - t^3.
  auto a12 = cesaro::a_coefficients(Signature::parse("1,2"));
  ASSERT_EQ(a12.coeff.size(), 4u);
  EXPECT_EQ(a12.coeff[1], BigInt(1));
  EXPECT_EQ(a12.coeff[2], BigInt(1));
  EXPECT_EQ(a12.coeff[3], BigInt(-1));
}

TEST(ACoefficientsTest, EvaluationMatchesProductForm) {
  for (const char* text : {"1", "2", "1,2", "2,3", "1,1,2", "1,2,3"}) {
    Signature sig = Signature::parse(text);
    auto a = cesaro::a_coefficients(sig);
    EXPECT_EQ(a.degree(), sig.sum_parts());
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                  67, 71}) {
      Rational t(1, p);
      Rational horner = 0;
      for (std::size_t k = a.coeff.size(); k-- > 0;) {
        horner = horner * t + Rational(a.coeff[k]);
      }
      Rational product = 1;
      for (std::uint32_t part : sig.parts()) {
        product *= 1 - cesaro::rational_pow(t, part);
      }
      ASSERT_EQ(horner, 1 - product) << "sig=" << text << " p=" << p;
    }
  }
}

TEST(CombinatorialAverageTest, HandComputedValues) {
  Sieve sieve(100);
  // n = 1: only the empty term, mean is 1.
  EXPECT_EQ(cesaro::combinatorial_average(sieve, Signature::parse("1"), 1), Rational(1));
  // Signature (1), n = 4: mean of 1, 1/2, 2/3, 1/2 = 2/3.
  EXPECT_EQ(cesaro::combinatorial_average(sieve, Signature::parse("1"), 4),
            Rational(2, 3));
  // Signature (1,2), n = 6: direct mean of phi values.
  Rational direct = 0;
  for (std::uint64_t m = 1; m <= 6; ++m) {
    direct += cesaro::phi_tilde_sig(sieve, Signature::parse("1,2"), m);
  }
  direct /= 6;
  EXPECT_EQ(cesaro::combinatorial_average(sieve, Signature::parse("1,2"), 6), direct);
}

TEST(RTermTest, StructureAndContributionSum) {
  Sieve sieve(200);
  Signature sig = Signature::parse("1,2");
  const std::uint64_t n = 60;

  Rational total = 0;
  std::uint64_t visited = 0;
  std::map<std::uint64_t, unsigned> radical_seen;
  cesaro::for_each_r_term(sieve, sig, n, [&](const RTerm& term) {
    ++visited;
    EXPECT_GT(term.r, BigInt(1));
    EXPECT_NE(term.a_of_r, BigInt(0));
    EXPECT_GE(term.b, Rational(0));
    EXPECT_LE(term.b, Rational(1));
    EXPECT_EQ(term.pr, term.factorization.factors.size());

    // r reconstructs from its factorization, exponents within [1, deg(a)].
    BigInt r = 1;
    std::uint64_t radical = 1;
    for (const auto& pp : term.factorization.factors) {
      EXPECT_GE(pp.exponent, 1u);
      EXPECT_LE(pp.exponent, sig.sum_parts());
      r *= cesaro::big_pow(BigInt(pp.prime), pp.exponent);
      radical *= pp.prime;
    }
    EXPECT_EQ(r, term.r);
    EXPECT_EQ(term.b, Rational(n / radical, n));
    radical_seen[radical]++;

    // Accumulate the expansion to cross-check the fast path.
    int sign = term.pr % 2 == 0 ? 1 : -1;
    total += Rational(sign * term.a_of_r) * term.b / Rational(term.r);
  });

  auto stats = cesaro::combinatorial_average_stats(sieve, sig, n);
  EXPECT_EQ(stats.value, 1 + total);
  EXPECT_EQ(stats.terms_visited, visited);

  // Every squarefree radical q <= n appears; none repeats beyond its vector
  // count 3^omega(q) (support size 3 for this signature).
  for (std::uint64_t q = 2; q <= n; ++q) {
    if (!sieve.is_squarefree(q)) {
      EXPECT_EQ(radical_seen.count(q), 0u);
      continue;
    }
    unsigned omega = 0;
    sieve.for_each_distinct_prime(q, [&](std::uint32_t) { ++omega; });
    unsigned expected = 1;
    for (unsigned i = 0; i < omega; ++i) expected *= 3;
    EXPECT_EQ(radical_seen[q], expected) << "q=" << q;
  }
}

TEST(CombinatorialAverageTest, VisitBudgetForPairSignature) {
  Sieve sieve(1000);
  auto stats =
      cesaro::combinatorial_average_stats(sieve, Signature::parse("1,2"), 1000);
  EXPECT_LT(stats.terms_visited, 100'000u);
}

TEST(VerifyIdentityTest, HoldsForCoreSignatures) {
  Sieve sieve(1000);
  EXPECT_TRUE(cesaro::verify_identity(sieve, Signature::parse("1"), 300));
  EXPECT_TRUE(cesaro::verify_identity(sieve, Signature::parse("2"), 300));
  EXPECT_TRUE(cesaro::verify_identity(sieve, Signature::parse("1,2"), 200));
  EXPECT_TRUE(cesaro::verify_identity(sieve, Signature::parse("3"), 150));
  EXPECT_TRUE(cesaro::verify_identity(sieve, Signature::parse("1,1"), 150));
}

TEST(CombIdentityTest, Errors) {
  Sieve sieve(100);
  EXPECT_THROW(cesaro::combinatorial_average(sieve, Signature::parse("1"), 0),
               std::invalid_argument);
  EXPECT_THROW(cesaro::combinatorial_average(sieve, Signature::parse("1"), 101),
               std::out_of_range);
  EXPECT_THROW(cesaro::verify_identity(sieve, Signature::parse("1"), 101),
               std::out_of_range);
}

}  // namespace
