#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "cesaro/arith.hpp"
#include "cesaro/euler.hpp"
#include "cesaro/numeric.hpp"
#include "cesaro/sieve.hpp"
#include "cesaro/signature.hpp"

namespace cesaro {

// Empirical distribution of the signature's multiplicative mean function
// over 1..N: counts[i] = #{ k <= N : value(k) <= grid[i] }. The function
// takes values in (0, 1], so with grid.back() >= 1 every sample is counted
// and F(grid.back()) = 1.
struct EmpiricalCDF {
  Signature sig;
  std::uint64_t sample_size = 0;
  std::vector<double> grid;
  std::vector<std::uint64_t> counts;

  double cdf_at(std::size_t i) const {
    return static_cast<double>(counts[i]) / static_cast<double>(sample_size);
  }
};

// Uniform default grid: 1001 points 0, 1/1000, ..., 1.
std::vector<double> default_cdf_grid();

// Double-precision CDF; each sample is placed by binary search into the
// sorted grid. Throws std::invalid_argument for an empty or unsorted grid,
// std::out_of_range when N exceeds the sieve limit.
EmpiricalCDF empirical_cdf(const Sieve& sieve, const Signature& sig, std::uint64_t N,
                           std::vector<double> grid);

// Exact-rational counting for validation at small N: every sample and grid
// point compared as exact rationals, immune to double rounding at bucket
// boundaries.
std::vector<std::uint64_t> empirical_cdf_exact(const Sieve& sieve, const Signature& sig,
                                               std::uint64_t N,
                                               const std::vector<Rational>& grid);

// Signature with every part repeated s times; the limit distribution's s-th
// moment equals the limit mean of the repeated signature.
Signature sig_power(const Signature& sig, unsigned s);

// s-th moment of the limit distribution: certified enclosure of the limit
// mean for sig_power(sig, s). s = 0 returns exactly 1.
Enclosure moment(const Sieve& sieve, const Signature& sig, unsigned s,
                 std::uint64_t cutoff);

enum class FourierMethod { moment_series, exponential_average };

struct FourierCoefficient {
  long index = 0;
  std::complex<double> value;
  FourierMethod method = FourierMethod::moment_series;
  // moment_series: number of series terms taken and a bound on the dropped
  // tail. exponential_average: the sample size used.
  unsigned terms_used = 0;
  double truncation_bound = 0.0;
  std::uint64_t sample_size = 0;
};

// Fourier coefficient u_index of the limit distribution through the moment
// series
//   u_n = -sum_{m>=1} (-2 pi i n)^{m-1} / m! * M_m,
// M_m the m-th moment. Terms are added until the crude bound
// (2 pi |n|)^{m-1} / m! (moments are at most 1) falls below tol AND the
// ratio test guarantees the remaining tail is geometric with ratio <= 1/2;
// truncation_bound records twice the first omitted term bound. Terms near
// m = 2 pi |n| reach ~1e10 before the factorial wins, so the alternating
// sum cancels catastrophically in double; accumulation runs in extended
// precision (long double), which keeps the final absolute error near 1e-6
// for |n| <= 5. index = 0 returns the closed form 1 - limit mean.
FourierCoefficient fourier_u_moment_series(const Sieve& sieve, const Signature& sig,
                                           long index, double tol,
                                           std::uint64_t cutoff);

// Same coefficient through the transform of the empirical average:
//   u_n = (avg_{k<=N} e^{-2 pi i n value(k)} - 1) / (2 pi i n).
// index = 0 again returns the closed form. Negative indices reuse the power
// of the same rotation conjugated, so u_{-n} is the exact conjugate of u_n
// over the same sample.
FourierCoefficient fourier_u_exponential(const Sieve& sieve, const Signature& sig,
                                         long index, std::uint64_t N,
                                         std::uint64_t cutoff);

// One pass over the sample computing u_n for all n in [-index_max,
// index_max]. Entry i holds index n = i - index_max. The n = 0 slot is the
// closed form; the pass computes e^{-2 pi i n value(k)} by repeated
// multiplication of the n = 1 rotation.
std::vector<FourierCoefficient> fourier_u_exponential_batch(const Sieve& sieve,
                                                            const Signature& sig,
                                                            long index_max,
                                                            std::uint64_t N,
                                                            std::uint64_t cutoff);

// Fejer (Cesaro-weighted) partial sum of the Fourier series evaluated on a
// uniform t grid over [0, 1]: F(t) ~ sum_{|n|<=K} (1 - |n|/(K+1)) u_n
// e^{2 pi i n t}. Diagnostic reconstruction of the limit CDF; smooths the
// Gibbs ringing at the jump points but carries no accuracy contract.
std::vector<std::pair<double, double>> fejer_reconstruction(
    const std::vector<FourierCoefficient>& coeffs, std::size_t grid_points);

}  // namespace cesaro
