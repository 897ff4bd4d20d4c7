#include "cesaro/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cesaro {

std::vector<double> default_cdf_grid() {
  std::vector<double> grid(1001);
  for (std::size_t i = 0; i <= 1000; ++i) {
    grid[i] = static_cast<double>(i) / 1000.0;
  }
  return grid;
}

namespace {

void check_grid_sorted(std::size_t size, bool sorted) {
  if (size == 0) {
    throw std::invalid_argument("empirical_cdf: grid must be nonempty");
  }
  if (!sorted) {
    throw std::invalid_argument("empirical_cdf: grid must be sorted ascending");
  }
}

}  // namespace

EmpiricalCDF empirical_cdf(const Sieve& sieve, const Signature& sig, std::uint64_t N,
                           std::vector<double> grid) {
  check_grid_sorted(grid.size(), std::is_sorted(grid.begin(), grid.end()));
  if (N == 0) {
    throw std::invalid_argument("empirical_cdf: N must be positive");
  }
  if (N > sieve.limit()) {
    throw std::out_of_range("empirical_cdf: N exceeds sieve limit");
  }

  std::vector<std::uint64_t> bucket(grid.size() + 1, 0);
  PhiEvaluator phi(sieve, sig, N);
  for (std::uint64_t k = 1; k <= N; ++k) {
    double v = phi(k);
    // First grid point >= v; samples above grid.back() land in the overflow
    // bucket and are counted by no grid point.
    std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(grid.begin(), grid.end(), v) - grid.begin());
    ++bucket[idx];
  }

  EmpiricalCDF result{sig, N, std::move(grid), {}};
  result.counts.resize(result.grid.size());
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < result.grid.size(); ++i) {
    running += bucket[i];
    result.counts[i] = running;
  }
  return result;
}

std::vector<std::uint64_t> empirical_cdf_exact(const Sieve& sieve, const Signature& sig,
                                               std::uint64_t N,
                                               const std::vector<Rational>& grid) {
  check_grid_sorted(grid.size(), std::is_sorted(grid.begin(), grid.end()));
  if (N == 0) {
    throw std::invalid_argument("empirical_cdf_exact: N must be positive");
  }
  if (N > sieve.limit()) {
    throw std::out_of_range("empirical_cdf_exact: N exceeds sieve limit");
  }

  std::vector<std::uint64_t> bucket(grid.size() + 1, 0);
  for (std::uint64_t k = 1; k <= N; ++k) {
    Rational v = phi_tilde_sig(sieve, sig, k);
    std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(grid.begin(), grid.end(), v) - grid.begin());
    ++bucket[idx];
  }

  std::vector<std::uint64_t> counts(grid.size());
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    running += bucket[i];
    counts[i] = running;
  }
  return counts;
}

Signature sig_power(const Signature& sig, unsigned s) {
  if (s == 0) {
    throw std::invalid_argument("sig_power: s must be positive (s = 0 has no parts)");
  }
  std::vector<std::uint32_t> parts;
  parts.reserve(sig.size() * s);
  for (std::uint32_t p : sig.parts()) {
    for (unsigned j = 0; j < s; ++j) parts.push_back(p);
  }
  return Signature(std::move(parts));
}

Enclosure moment(const Sieve& sieve, const Signature& sig, unsigned s,
                 std::uint64_t cutoff) {
  if (s == 0) {
    return Enclosure{1.0, 0.0};
  }
  return phi_limit(sieve, sig_power(sig, s), cutoff);
}

namespace {

FourierCoefficient closed_form_u0(const Sieve& sieve, const Signature& sig,
                                  std::uint64_t cutoff, FourierMethod method) {
  Enclosure phi = phi_limit(sieve, sig, cutoff);
  FourierCoefficient c;
  c.index = 0;
  c.value = {1.0 - phi.value, 0.0};
  c.method = method;
  c.truncation_bound = phi.abs_error;
  return c;
}

// Smallest term count M such that the crude term bound (2 pi |n|)^{m-1}/m!
// is below tol at m = M + 1 and the ratio 2 pi |n| / (m + 1) has dropped to
// <= 1/2, so the dropped tail is dominated by a geometric series and is at
// most twice the first omitted bound.
struct SeriesPlan {
  unsigned terms = 0;
  double tail_bound = 0.0;
};

SeriesPlan plan_moment_series(long index, double tol) {
  const double x = 2.0 * std::numbers::pi * std::abs(static_cast<double>(index));
  double bound = 1.0;  // m = 1 term: x^0 / 1!
  unsigned m = 1;
  while (bound >= tol || x / (m + 1) > 0.5) {
    bound *= x / (m + 1);
    ++m;
    if (m > 100000) {
      throw std::invalid_argument("fourier_u_moment_series: tol unreachable");
    }
  }
  // bound now covers the first omitted term, m the number of terms taken.
  return SeriesPlan{m, 2.0 * bound};
}

}  // namespace

FourierCoefficient fourier_u_moment_series(const Sieve& sieve, const Signature& sig,
                                           long index, double tol,
                                           std::uint64_t cutoff) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("fourier_u_moment_series: tol must be positive");
  }
  if (index == 0) {
    return closed_form_u0(sieve, sig, cutoff, FourierMethod::moment_series);
  }

  SeriesPlan plan = plan_moment_series(index, tol);
  std::vector<Enclosure> moments = phi_limit_powers(sieve, sig, plan.terms, cutoff);

  // Terms near m = 2 pi |n| grow to ~(2 pi |n|)^m / m! before the factorial
  // wins; the alternating sum cancels almost all of it, so accumulate in
  // extended precision to keep the cancellation error below the tolerance.
  using CLD = std::complex<long double>;
  const long double pi_ld = std::numbers::pi_v<long double>;
  const CLD rot(0.0L, -2.0L * pi_ld * static_cast<long double>(index));
  CLD coeff(1.0L, 0.0L);  // (-2 pi i n)^{m-1} / m! at m = 1
  CLD sum(0.0L, 0.0L);
  for (unsigned m = 1; m <= plan.terms; ++m) {
    sum += coeff * static_cast<long double>(moments[m - 1].value);
    coeff *= rot / static_cast<long double>(m + 1);
  }
  CLD u = -sum;

  FourierCoefficient c;
  c.index = index;
  c.value = {static_cast<double>(u.real()), static_cast<double>(u.imag())};
  c.method = FourierMethod::moment_series;
  c.terms_used = plan.terms;
  c.truncation_bound = plan.tail_bound;
  return c;
}

FourierCoefficient fourier_u_exponential(const Sieve& sieve, const Signature& sig,
                                         long index, std::uint64_t N,
                                         std::uint64_t cutoff) {
  if (index == 0) {
    return closed_form_u0(sieve, sig, cutoff, FourierMethod::exponential_average);
  }
  if (N == 0) {
    throw std::invalid_argument("fourier_u_exponential: N must be positive");
  }
  if (N > sieve.limit()) {
    throw std::out_of_range("fourier_u_exponential: N exceeds sieve limit");
  }

  const double two_pi = 2.0 * std::numbers::pi;
  const long n_abs = std::abs(index);
  PhiEvaluator phi(sieve, sig, N);
  KahanSum re_sum;
  KahanSum im_sum;
  for (std::uint64_t k = 1; k <= N; ++k) {
    double angle = -two_pi * static_cast<double>(n_abs) * phi(k);
    re_sum.add(std::cos(angle));
    im_sum.add(std::sin(angle));
  }

  double n_dbl = static_cast<double>(N);
  double avg_re = re_sum.value() / n_dbl;
  double avg_im = im_sum.value() / n_dbl;

  // u = (avg - 1) / (2 pi i n) = (im(z)/w, -re(z)/w) for z = avg - 1,
  // w = 2 pi n, written in components so that negating the index conjugates
  // the result bit for bit.
  double w = two_pi * static_cast<double>(n_abs);
  std::complex<double> u(avg_im / w, -(avg_re - 1.0) / w);
  if (index < 0) u = std::conj(u);

  FourierCoefficient c;
  c.index = index;
  c.value = u;
  c.method = FourierMethod::exponential_average;
  c.sample_size = N;
  return c;
}

std::vector<FourierCoefficient> fourier_u_exponential_batch(const Sieve& sieve,
                                                            const Signature& sig,
                                                            long index_max,
                                                            std::uint64_t N,
                                                            std::uint64_t cutoff) {
  if (index_max < 1) {
    throw std::invalid_argument("fourier_u_exponential_batch: index_max must be >= 1");
  }
  if (N == 0) {
    throw std::invalid_argument("fourier_u_exponential_batch: N must be positive");
  }
  if (N > sieve.limit()) {
    throw std::out_of_range("fourier_u_exponential_batch: N exceeds sieve limit");
  }

  const std::size_t K = static_cast<std::size_t>(index_max);
  const double two_pi = 2.0 * std::numbers::pi;

  // Validate the cutoff and settle the n = 0 slot before the long pass.
  FourierCoefficient u0 =
      closed_form_u0(sieve, sig, cutoff, FourierMethod::exponential_average);

  PhiEvaluator phi(sieve, sig, N);
  std::vector<KahanSum> re_sum(K);
  std::vector<KahanSum> im_sum(K);
  for (std::uint64_t k = 1; k <= N; ++k) {
    double angle = -two_pi * phi(k);
    double base_re = std::cos(angle);
    double base_im = std::sin(angle);
    double zr = base_re;
    double zi = base_im;
    for (std::size_t m = 0; m < K; ++m) {
      re_sum[m].add(zr);
      im_sum[m].add(zi);
      double nr = zr * base_re - zi * base_im;
      double ni = zr * base_im + zi * base_re;
      zr = nr;
      zi = ni;
    }
  }

  std::vector<FourierCoefficient> result(2 * K + 1);
  result[K] = u0;
  for (std::size_t m = 1; m <= K; ++m) {
    double avg_re = re_sum[m - 1].value() / static_cast<double>(N);
    double avg_im = im_sum[m - 1].value() / static_cast<double>(N);
    double w = two_pi * static_cast<double>(m);
    std::complex<double> u(avg_im / w, -(avg_re - 1.0) / w);

    FourierCoefficient pos;
    pos.index = static_cast<long>(m);
    pos.value = u;
    pos.method = FourierMethod::exponential_average;
    pos.sample_size = N;
    result[K + m] = pos;

    FourierCoefficient neg = pos;
    neg.index = -static_cast<long>(m);
    neg.value = std::conj(u);
    result[K - m] = neg;
  }
  return result;
}

std::vector<std::pair<double, double>> fejer_reconstruction(
    const std::vector<FourierCoefficient>& coeffs, std::size_t grid_points) {
  if (grid_points < 2) {
    throw std::invalid_argument("fejer_reconstruction: need at least 2 grid points");
  }
  long K = 0;
  for (const auto& c : coeffs) K = std::max(K, std::abs(c.index));

  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<std::pair<double, double>> out;
  out.reserve(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(grid_points - 1);
    KahanSum acc;
    for (const auto& c : coeffs) {
      double weight = 1.0 - static_cast<double>(std::abs(c.index)) /
                                static_cast<double>(K + 1);
      double angle = two_pi * static_cast<double>(c.index) * t;
      acc.add(weight * (c.value.real() * std::cos(angle) -
                        c.value.imag() * std::sin(angle)));
    }
    out.emplace_back(t, acc.value());
  }
  return out;
}

}  // namespace cesaro
