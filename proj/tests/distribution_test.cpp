#include "cesaro/distribution.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace {

using cesaro::Enclosure;
using cesaro::FourierCoefficient;
using cesaro::FourierMethod;
using cesaro::KahanSum;
using cesaro::PhiEvaluator;
using cesaro::Rational;
using cesaro::Sieve;
using cesaro::Signature;

double six_over_pi_squared() {
  return 6.0 / (std::numbers::pi * std::numbers::pi);
}

const Sieve& big_sieve() {
  static const Sieve sieve(1'000'000);
  return sieve;
}

// Dyadic grid 0, 1/1024, ..., 1. Every grid point is an exact double, so a
// sample that lands exactly on a grid point is compared identically by the
// double path and the exact path. Samples equal to a dyadic grid point have
// radical 2 for the signatures used here, and those products are computed
// exactly in double as well.
std::vector<double> dyadic_grid() {
  std::vector<double> grid(1025);
  for (std::size_t i = 0; i <= 1024; ++i) {
    grid[i] = static_cast<double>(i) / 1024.0;
  }
  return grid;
}

TEST(EmpiricalCdfTest, HandComputedSmallSample) {
  Sieve sieve(100);
  Signature sig = Signature::parse("1");
  // Values for k = 1..4: 1, 1/2, 2/3, 1/2.
  auto cdf = cesaro::empirical_cdf(sieve, sig, 4, {0.0, 0.4, 0.5, 0.9, 1.0});
  ASSERT_EQ(cdf.counts.size(), 5u);
  EXPECT_EQ(cdf.counts[0], 0u);
  EXPECT_EQ(cdf.counts[1], 0u);
  EXPECT_EQ(cdf.counts[2], 2u);
  EXPECT_EQ(cdf.counts[3], 3u);
  EXPECT_EQ(cdf.counts[4], 4u);
  EXPECT_DOUBLE_EQ(cdf.cdf_at(2), 0.5);
  EXPECT_DOUBLE_EQ(cdf.cdf_at(4), 1.0);
  EXPECT_EQ(cdf.sample_size, 4u);
}

TEST(EmpiricalCdfTest, ExactVariantHandComputedSample) {
  Sieve sieve(100);
  Signature sig = Signature::parse("1");
  // Values for k = 1..6: 1, 1/2, 2/3, 1/2, 4/5, 1/3.
  std::vector<Rational> grid = {Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                Rational(4, 5), Rational(1)};
  auto counts = cesaro::empirical_cdf_exact(sieve, sig, 6, grid);
  ASSERT_EQ(counts.size(), 5u);
  EXPECT_EQ(counts[0], 1u);
  EXPECT_EQ(counts[1], 3u);
  EXPECT_EQ(counts[2], 4u);
  EXPECT_EQ(counts[3], 5u);
  EXPECT_EQ(counts[4], 6u);
}

TEST(EmpiricalCdfTest, DefaultGridEndpointsAndMonotonicity) {
  Signature sig = Signature::parse("1,2");
  const std::uint64_t N = 10'000;
  auto cdf = cesaro::empirical_cdf(big_sieve(), sig, N, cesaro::default_cdf_grid());
  ASSERT_EQ(cdf.grid.size(), 1001u);
  EXPECT_DOUBLE_EQ(cdf.grid.front(), 0.0);
  EXPECT_DOUBLE_EQ(cdf.grid.back(), 1.0);
  // Every sample lies in (0, 1].
  EXPECT_EQ(cdf.counts.front(), 0u);
  EXPECT_EQ(cdf.counts.back(), N);
  EXPECT_TRUE(std::is_sorted(cdf.counts.begin(), cdf.counts.end()));
}

TEST(EmpiricalCdfTest, DoubleAndExactPathsAgreeOnDyadicGrid) {
  const std::uint64_t N = 10'000;
  std::vector<double> dgrid = dyadic_grid();
  std::vector<Rational> rgrid;
  rgrid.reserve(dgrid.size());
  for (std::size_t i = 0; i < dgrid.size(); ++i) {
    rgrid.emplace_back(static_cast<int>(i), 1024);
  }
  for (const char* sig_text : {"1", "2", "1,2"}) {
    Signature sig = Signature::parse(sig_text);
    auto cdf = cesaro::empirical_cdf(big_sieve(), sig, N, dgrid);
    auto exact = cesaro::empirical_cdf_exact(big_sieve(), sig, N, rgrid);
    ASSERT_EQ(cdf.counts.size(), exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
      EXPECT_EQ(cdf.counts[i], exact[i]) << sig_text << " bucket " << i;
    }
  }
}

TEST(EmpiricalCdfTest, RejectsBadArguments) {
  Sieve sieve(100);
  Signature sig = Signature::parse("1");
  EXPECT_THROW(cesaro::empirical_cdf(sieve, sig, 10, {}), std::invalid_argument);
  EXPECT_THROW(cesaro::empirical_cdf(sieve, sig, 10, {0.5, 0.4}),
               std::invalid_argument);
  EXPECT_THROW(cesaro::empirical_cdf(sieve, sig, 0, {0.0, 1.0}),
               std::invalid_argument);
  EXPECT_THROW(cesaro::empirical_cdf(sieve, sig, 101, {0.0, 1.0}),
               std::out_of_range);
  std::vector<Rational> bad = {Rational(1, 2), Rational(1, 3)};
  EXPECT_THROW(cesaro::empirical_cdf_exact(sieve, sig, 10, bad),
               std::invalid_argument);
}

TEST(SigPowerTest, RepeatsEveryPart) {
  Signature sig = Signature::parse("1,2");
  Signature squared = cesaro::sig_power(sig, 2);
  std::vector<std::uint32_t> expected = {1, 1, 2, 2};
  EXPECT_EQ(squared.parts(), expected);
  EXPECT_EQ(cesaro::sig_power(sig, 1), sig);
  EXPECT_THROW(cesaro::sig_power(sig, 0), std::invalid_argument);
}

TEST(MomentTest, ZerothMomentIsExactlyOne) {
  Enclosure m0 = cesaro::moment(big_sieve(), Signature::parse("1,2"), 0, 1000);
  EXPECT_EQ(m0.value, 1.0);
  EXPECT_EQ(m0.abs_error, 0.0);
}

TEST(MomentTest, FirstMomentMatchesLimitMean) {
  Enclosure m1 = cesaro::moment(big_sieve(), Signature::parse("1"), 1, 1'000'000);
  double oracle = six_over_pi_squared();
  EXPECT_LE(std::abs(m1.value - oracle), m1.abs_error + 1e-13);
}

TEST(MomentTest, MomentsDecreaseAndDominatePowersOfTheMean) {
  Signature sig = Signature::parse("1,2");
  const std::uint64_t cutoff = 1'000'000;
  Enclosure m1 = cesaro::moment(big_sieve(), sig, 1, cutoff);
  Enclosure m2 = cesaro::moment(big_sieve(), sig, 2, cutoff);
  Enclosure m3 = cesaro::moment(big_sieve(), sig, 3, cutoff);
  // Values lie in (0, 1], so moments decrease in s; Jensen gives
  // M_s >= (M_1)^s.
  EXPECT_LE(m2.value, m1.value + m1.abs_error + m2.abs_error);
  EXPECT_LE(m3.value, m2.value + m2.abs_error + m3.abs_error);
  EXPECT_GE(m2.value + m2.abs_error,
            std::pow(m1.value - m1.abs_error, 2.0));
  EXPECT_GE(m3.value + m3.abs_error,
            std::pow(m1.value - m1.abs_error, 3.0));
}

TEST(MomentTest, MatchesEmpiricalPowerMeans) {
  Signature sig = Signature::parse("1");
  const std::uint64_t N = 100'000;
  PhiEvaluator phi(big_sieve(), sig, N);
  KahanSum s1;
  KahanSum s2;
  for (std::uint64_t k = 1; k <= N; ++k) {
    double v = phi(k);
    s1.add(v);
    s2.add(v * v);
  }
  double mean1 = s1.value() / static_cast<double>(N);
  double mean2 = s2.value() / static_cast<double>(N);
  Enclosure m1 = cesaro::moment(big_sieve(), sig, 1, 1'000'000);
  Enclosure m2 = cesaro::moment(big_sieve(), sig, 2, 1'000'000);
  EXPECT_LE(std::abs(mean1 - m1.value), 1e-3 + m1.abs_error);
  EXPECT_LE(std::abs(mean2 - m2.value), 1e-3 + m2.abs_error);
}

TEST(FourierTest, IndexZeroIsOneMinusLimitMean) {
  Signature sig = Signature::parse("1");
  const std::uint64_t cutoff = 1'000'000;
  Enclosure phi = cesaro::phi_limit(big_sieve(), sig, cutoff);
  FourierCoefficient series =
      cesaro::fourier_u_moment_series(big_sieve(), sig, 0, 1e-9, cutoff);
  FourierCoefficient average =
      cesaro::fourier_u_exponential(big_sieve(), sig, 0, 1000, cutoff);
  EXPECT_EQ(series.value.real(), 1.0 - phi.value);
  EXPECT_EQ(series.value.imag(), 0.0);
  EXPECT_EQ(series.value, average.value);
  EXPECT_EQ(series.truncation_bound, phi.abs_error);
  EXPECT_EQ(series.method, FourierMethod::moment_series);
  EXPECT_EQ(average.method, FourierMethod::exponential_average);
}

TEST(FourierTest, NegatingTheIndexConjugatesBitwise) {
  Signature sig = Signature::parse("1,2");
  const std::uint64_t N = 10'000;
  const std::uint64_t cutoff = 100'000;
  for (long n = 1; n <= 3; ++n) {
    FourierCoefficient pos =
        cesaro::fourier_u_exponential(big_sieve(), sig, n, N, cutoff);
    FourierCoefficient neg =
        cesaro::fourier_u_exponential(big_sieve(), sig, -n, N, cutoff);
    EXPECT_EQ(neg.value.real(), pos.value.real());
    EXPECT_EQ(neg.value.imag(), -pos.value.imag());
  }

  auto batch = cesaro::fourier_u_exponential_batch(big_sieve(), sig, 3, N, cutoff);
  ASSERT_EQ(batch.size(), 7u);
  for (long m = 1; m <= 3; ++m) {
    const FourierCoefficient& pos = batch[static_cast<std::size_t>(3 + m)];
    const FourierCoefficient& neg = batch[static_cast<std::size_t>(3 - m)];
    EXPECT_EQ(pos.index, m);
    EXPECT_EQ(neg.index, -m);
    EXPECT_EQ(neg.value.real(), pos.value.real());
    EXPECT_EQ(neg.value.imag(), -pos.value.imag());
  }
}

TEST(FourierTest, BatchAgreesWithSingleCoefficientCalls) {
  Signature sig = Signature::parse("1");
  const std::uint64_t N = 10'000;
  const std::uint64_t cutoff = 100'000;
  auto batch = cesaro::fourier_u_exponential_batch(big_sieve(), sig, 2, N, cutoff);
  for (long n = -2; n <= 2; ++n) {
    FourierCoefficient single =
        cesaro::fourier_u_exponential(big_sieve(), sig, n, N, cutoff);
    const FourierCoefficient& from_batch = batch[static_cast<std::size_t>(2 + n)];
    EXPECT_EQ(from_batch.index, n);
    // The batch builds e^{-2 pi i n v} by repeated complex multiplication
    // instead of one sin/cos per index, so agreement is close but not
    // bitwise.
    EXPECT_NEAR(from_batch.value.real(), single.value.real(), 1e-9);
    EXPECT_NEAR(from_batch.value.imag(), single.value.imag(), 1e-9);
  }
}

TEST(FourierTest, SeriesAndAverageMethodsAgree) {
  const std::uint64_t N = 1'000'000;
  const std::uint64_t cutoff = 1'000'000;
  for (const char* sig_text : {"1", "2"}) {
    Signature sig = Signature::parse(sig_text);
    auto averages =
        cesaro::fourier_u_exponential_batch(big_sieve(), sig, 3, N, cutoff);
    for (long n = 1; n <= 3; ++n) {
      FourierCoefficient series =
          cesaro::fourier_u_moment_series(big_sieve(), sig, n, 1e-9, cutoff);
      const FourierCoefficient& average = averages[static_cast<std::size_t>(3 + n)];
      double diff = std::abs(series.value - average.value);
      EXPECT_LE(diff, 1e-3) << sig_text << " n=" << n;
    }
  }
}

TEST(FourierTest, SeriesTruncationMetadata) {
  Signature sig = Signature::parse("1");
  FourierCoefficient c =
      cesaro::fourier_u_moment_series(big_sieve(), sig, 1, 1e-12, 100'000);
  // The term bound (2 pi)^{m-1} / m! needs a few dozen terms to fall below
  // 1e-12 with the geometric-ratio guarantee.
  EXPECT_GE(c.terms_used, 15u);
  EXPECT_LE(c.terms_used, 80u);
  EXPECT_GT(c.truncation_bound, 0.0);
  EXPECT_LT(c.truncation_bound, 2e-12);
  EXPECT_LT(std::abs(c.value), 1.0);
}

TEST(FourierTest, RejectsBadArguments) {
  Sieve sieve(1000);
  Signature sig = Signature::parse("1");
  EXPECT_THROW(cesaro::fourier_u_moment_series(sieve, sig, 1, 0.0, 100),
               std::invalid_argument);
  EXPECT_THROW(cesaro::fourier_u_exponential(sieve, sig, 1, 0, 100),
               std::invalid_argument);
  EXPECT_THROW(cesaro::fourier_u_exponential(sieve, sig, 1, 2000, 100),
               std::out_of_range);
  EXPECT_THROW(cesaro::fourier_u_exponential_batch(sieve, sig, 0, 100, 100),
               std::invalid_argument);
  EXPECT_THROW(cesaro::fejer_reconstruction({}, 1), std::invalid_argument);
}

TEST(FejerTest, ReconstructionTracksTheDistribution) {
  Signature sig = Signature::parse("1");
  const std::uint64_t N = 100'000;
  auto coeffs =
      cesaro::fourier_u_exponential_batch(big_sieve(), sig, 12, N, 1'000'000);
  auto curve = cesaro::fejer_reconstruction(coeffs, 201);
  ASSERT_EQ(curve.size(), 201u);
  EXPECT_DOUBLE_EQ(curve.front().first, 0.0);
  EXPECT_DOUBLE_EQ(curve.back().first, 1.0);

  // The periodized distribution function jumps by 1 across t = 0, so the
  // Fejer mean lands near the midpoint there; in the interior it follows
  // the rise of the distribution. The Fejer kernel is nonnegative, so no
  // value can overshoot the range [0, 1] by more than the coefficient
  // truncation slack.
  EXPECT_GT(curve.front().second, 0.2);
  EXPECT_LT(curve.front().second, 0.8);
  double at_quarter = curve[50].second;
  double at_three_quarters = curve[150].second;
  EXPECT_GT(at_three_quarters - at_quarter, 0.15);
  for (const auto& [t, value] : curve) {
    EXPECT_GT(value, -0.25);
    EXPECT_LT(value, 1.25);
  }
}

}  // namespace
