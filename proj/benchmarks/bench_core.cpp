#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "cesaro/arith.hpp"
#include "cesaro/comb_identity.hpp"
#include "cesaro/distribution.hpp"
#include "cesaro/euler.hpp"
#include "cesaro/numeric.hpp"
#include "cesaro/scan.hpp"
#include "cesaro/sieve.hpp"
#include "cesaro/signature.hpp"

namespace {

const cesaro::Sieve& shared_sieve() {
  static const cesaro::Sieve sieve(10'000'000);
  return sieve;
}

void BM_SieveBuild(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    cesaro::Sieve sieve(limit);
    benchmark::DoNotOptimize(sieve.smallest_prime_factor(limit));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}
BENCHMARK(BM_SieveBuild)->Arg(100'000)->Arg(1'000'000)->Arg(10'000'000)
    ->Unit(benchmark::kMillisecond);

void BM_Factorize(benchmark::State& state) {
  const cesaro::Sieve& sieve = shared_sieve();
  std::uint64_t n = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sieve.factorize(n));
    n = n % 9'999'998 + 2;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Factorize);

void BM_MeanFunctionScan(benchmark::State& state) {
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  cesaro::Signature sig = cesaro::Signature::parse("1,2");
  for (auto _ : state) {
    cesaro::PhiEvaluator eval(shared_sieve(), sig, n_max);
    cesaro::KahanSum sum;
    for (std::uint64_t k = 1; k <= n_max; ++k) sum.add(eval(k));
    benchmark::DoNotOptimize(sum.value());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n_max));
}
BENCHMARK(BM_MeanFunctionScan)->Arg(100'000)->Arg(1'000'000)
    ->Unit(benchmark::kMillisecond);

void BM_ExactMeanFunction(benchmark::State& state) {
  const cesaro::Sieve& sieve = shared_sieve();
  cesaro::Signature sig = cesaro::Signature::parse("1,2");
  std::uint64_t n = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cesaro::phi_tilde_sig(sieve, sig, n));
    n = n % 999'998 + 2;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ExactMeanFunction);

void BM_LimitProduct(benchmark::State& state) {
  const auto cutoff = static_cast<std::uint64_t>(state.range(0));
  cesaro::Signature sig = cesaro::Signature::parse("1,2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(cesaro::phi_limit(shared_sieve(), sig, cutoff));
  }
  state.SetItemsProcessed(
      state.iterations() *
      static_cast<std::int64_t>(shared_sieve().prime_count(cutoff)));
}
BENCHMARK(BM_LimitProduct)->Arg(1'000'000)->Arg(10'000'000)
    ->Unit(benchmark::kMillisecond);

void BM_CombinatorialAverage(benchmark::State& state) {
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  cesaro::Signature sig = cesaro::Signature::parse("1,2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cesaro::combinatorial_average(shared_sieve(), sig, n_max));
  }
}
BENCHMARK(BM_CombinatorialAverage)->Arg(500)->Arg(2'000)
    ->Unit(benchmark::kMillisecond);

void BM_XiEtaScan(benchmark::State& state) {
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  cesaro::Signature sig = cesaro::Signature::parse("1");
  cesaro::Enclosure phi =
      cesaro::phi_limit(shared_sieve(), sig, 10'000'000);
  for (auto _ : state) {
    cesaro::PhiEvaluator eval(shared_sieve(), sig, n_max);
    cesaro::XiEtaScan scan([&eval](std::uint64_t k) { return eval(k); }, 1,
                           n_max, phi);
    double last = 0.0;
    while (auto row = scan.next()) last = row->xi;
    benchmark::DoNotOptimize(last);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n_max));
}
BENCHMARK(BM_XiEtaScan)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_GroupOrderClosedForm(benchmark::State& state) {
  const cesaro::Sieve& sieve = shared_sieve();
  std::uint64_t n = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cesaro::gl_order(sieve, 4, n));
    n = n % 99'998 + 2;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GroupOrderClosedForm);

void BM_BruteForceOrder(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cesaro::brute_force_gl_order(2, n, 100'000'000, 1));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(n * n * n * n));
}
BENCHMARK(BM_BruteForceOrder)->Arg(12)->Arg(30);

void BM_FourierBatch(benchmark::State& state) {
  const auto sample_size = static_cast<std::uint64_t>(state.range(0));
  cesaro::Signature sig = cesaro::Signature::parse("1");
  for (auto _ : state) {
    auto coeffs = cesaro::fourier_u_exponential_batch(shared_sieve(), sig, 5,
                                                      sample_size, 1'000'000);
    benchmark::DoNotOptimize(coeffs.back().value);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(sample_size));
}
BENCHMARK(BM_FourierBatch)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
