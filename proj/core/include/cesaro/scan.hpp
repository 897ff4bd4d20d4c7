#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cesaro/euler.hpp"
#include "cesaro/numeric.hpp"

namespace cesaro {

// One row of a weighted scan at exponent s:
//   partial_sum    = S_n^s = sum_{k<=n} k^s y_k
//   normalized_avg = (s+1) S_n^s / n^{s+1}
//   xi             = (S_n^s - mid * n^{s+1}/(s+1)) / n^s
//   eta            = (S_n^s - mid * sum_{k<=n} k^s) / n^s
// where mid is the midpoint of the limit-mean enclosure. xi_uncertainty is
// the exact sensitivity of xi to that enclosure: half-width * n / (s+1).
struct ScanRow {
  std::uint64_t n = 0;
  double partial_sum = 0.0;
  double normalized_avg = 0.0;
  double xi = 0.0;
  double eta = 0.0;
  double xi_uncertainty = 0.0;
};

struct CesaroLimitEstimate {
  double mean = 0.0;
  std::uint64_t count = 0;
};

inline constexpr unsigned kMaxScanExponent = 8;

namespace detail {

inline void check_scan_args(unsigned s, std::uint64_t n_max) {
  if (s > kMaxScanExponent) {
    throw std::invalid_argument("scan: exponent s above the supported cap of 8");
  }
  if (n_max == 0) {
    throw std::invalid_argument("scan: n_max must be positive");
  }
}

}  // namespace detail

// Streaming S_n^s generator over a pull-based source of y values. The source
// is called once per k in increasing order, so a scan to 1e7 runs in O(1)
// memory. Kahan compensation keeps the accumulated rounding O(eps) per term.
template <typename Source>
  requires std::invocable<Source&, std::uint64_t>
class WeightedPartialSums {
 public:
  WeightedPartialSums(Source source, unsigned s, std::uint64_t n_max)
      : source_(std::move(source)), s_(s), n_max_(n_max) {
    detail::check_scan_args(s, n_max);
  }

  // Returns {n, S_n^s} pairs for n = 1, 2, ..., n_max, then nullopt.
  std::optional<std::pair<std::uint64_t, double>> next() {
    if (n_ >= n_max_) return std::nullopt;
    ++n_;
    double y = source_(n_);
    sum_.add(pow_int(static_cast<double>(n_), s_) * y);
    return std::make_pair(n_, sum_.value());
  }

 private:
  Source source_;
  unsigned s_;
  std::uint64_t n_max_;
  std::uint64_t n_ = 0;
  KahanSum sum_;
};

// Streaming xi/eta scan. Rejects enclosures wider than 1e-6 in half-width:
// xi grows linearly in n times the enclosure error, so a sloppy limit value
// would poison every row past ~1/width.
template <typename Source>
  requires std::invocable<Source&, std::uint64_t>
class XiEtaScan {
 public:
  XiEtaScan(Source source, unsigned s, std::uint64_t n_max, Enclosure phi)
      : source_(std::move(source)), s_(s), n_max_(n_max), phi_(phi) {
    detail::check_scan_args(s, n_max);
    if (!(phi.abs_error <= 1e-6)) {
      throw std::invalid_argument(
          "xi_eta_scan: limit enclosure is wider than 1e-6, refine the cutoff");
    }
  }

  std::optional<ScanRow> next() {
    if (n_ >= n_max_) return std::nullopt;
    ++n_;
    double y = source_(n_);
    double n_dbl = static_cast<double>(n_);
    double npow = pow_int(n_dbl, s_);
    weighted_.add(npow * y);
    weights_.add(npow);

    ScanRow row;
    row.n = n_;
    row.partial_sum = weighted_.value();
    double npow1 = npow * n_dbl;
    row.normalized_avg = row.partial_sum * (s_ + 1.0) / npow1;
    row.xi = (row.partial_sum - phi_.value * (npow1 / (s_ + 1.0))) / npow;
    row.eta = (row.partial_sum - phi_.value * weights_.value()) / npow;
    row.xi_uncertainty = phi_.abs_error * n_dbl / (s_ + 1.0);
    return row;
  }

 private:
  Source source_;
  unsigned s_;
  std::uint64_t n_max_;
  Enclosure phi_;
  std::uint64_t n_ = 0;
  KahanSum weighted_;
  KahanSum weights_;
};

template <typename Source>
XiEtaScan(Source, unsigned, std::uint64_t, Enclosure) -> XiEtaScan<Source>;

// Plain running mean of a pull-based source, Kahan-compensated.
template <typename Source>
  requires std::invocable<Source&, std::uint64_t>
CesaroLimitEstimate cesaro_average(Source source, std::uint64_t n_max) {
  if (n_max == 0) {
    throw std::invalid_argument("cesaro_average: n_max must be positive");
  }
  KahanSum sum;
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    sum.add(source(k));
  }
  return CesaroLimitEstimate{sum.value() / static_cast<double>(n_max), n_max};
}

// Ratio sum_{k<=n} k^s y_k / sum_{k<=n} k^s at n = n_max for y the
// signature's multiplicative mean function; the weighted analogue of the
// plain Cesaro mean, converging to the same limit for every s.
double weighted_average_check(const Sieve& sieve, const Signature& sig, unsigned s,
                              std::uint64_t n_max);

// Exact-arithmetic identity checks, sized for n up to ~1e3.

struct ExactScanRow {
  std::uint64_t n = 0;
  Rational partial_sum;
  Rational xi;
  Rational eta;
};

// Exact xi/eta rows for the sequence y (y[k-1] is the value at k) against an
// exact limit constant. Validates the floating scan and the algebraic
// identities relating xi and eta.
std::vector<ExactScanRow> xi_eta_scan_exact(const std::vector<Rational>& y,
                                            unsigned s, const Rational& phi);

// Verifies S_n^{s+1} = n * S_n^s - sum_{m<=n-1} S_m^s exactly for the given
// sequence and every n up to y.size(). The identity is summation by parts:
// the term k^s y_k appears in S_m^s for the n - k values m = k..n-1, and
// k * k^s y_k = (n - (n - k)) * k^s y_k.
bool check_star_recurrence(const std::vector<Rational>& y, unsigned s);

}  // namespace cesaro
