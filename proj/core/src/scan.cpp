#include "cesaro/scan.hpp"

#include "cesaro/arith.hpp"

namespace cesaro {

double weighted_average_check(const Sieve& sieve, const Signature& sig, unsigned s,
                              std::uint64_t n_max) {
  detail::check_scan_args(s, n_max);
  if (n_max > sieve.limit()) {
    throw std::out_of_range("weighted_average_check: n_max exceeds sieve limit");
  }
  PhiEvaluator phi(sieve, sig, n_max);
  KahanSum weighted;
  KahanSum weights;
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    double kpow = pow_int(static_cast<double>(k), s);
    weighted.add(kpow * phi(k));
    weights.add(kpow);
  }
  return weighted.value() / weights.value();
}

std::vector<ExactScanRow> xi_eta_scan_exact(const std::vector<Rational>& y,
                                            unsigned s, const Rational& phi) {
  detail::check_scan_args(s, y.empty() ? 0 : y.size());

  std::vector<ExactScanRow> rows;
  rows.reserve(y.size());
  Rational weighted = 0;
  BigInt weights = 0;
  for (std::uint64_t n = 1; n <= y.size(); ++n) {
    BigInt npow = big_pow(BigInt(n), s);
    weighted += Rational(npow) * y[n - 1];
    weights += npow;

    ExactScanRow row;
    row.n = n;
    row.partial_sum = weighted;
    Rational npow1(npow * n);
    row.xi = (weighted - phi * npow1 / (s + 1)) / Rational(npow);
    row.eta = (weighted - phi * Rational(weights)) / Rational(npow);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool check_star_recurrence(const std::vector<Rational>& y, unsigned s) {
  if (s > kMaxScanExponent) {
    throw std::invalid_argument("check_star_recurrence: exponent above cap");
  }
  const std::size_t n_max = y.size();

  // Exact prefix sums S_n^s and S_n^{s+1}.
  std::vector<Rational> lo(n_max + 1);
  std::vector<Rational> hi(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational npow(big_pow(BigInt(n), s));
    lo[n] = lo[n - 1] + npow * y[n - 1];
    hi[n] = hi[n - 1] + npow * n * y[n - 1];
  }

  Rational lower_sum = 0;  // sum_{m <= n-1} S_m^s
  for (std::size_t n = 1; n <= n_max; ++n) {
    lower_sum += lo[n - 1];
    if (hi[n] != Rational(n) * lo[n] - lower_sum) {
      return false;
    }
  }
  return true;
}

}  // namespace cesaro
