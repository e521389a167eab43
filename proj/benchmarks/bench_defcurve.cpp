// Microbenchmarks for the hot paths: closed-form dimension counts, the
// brute-force cohomology oracle, finite-field kernel computations, and
// truncated power-series composition.

#include "defcurve/algebra.hpp"
#include "defcurve/cohomology.hpp"
#include "defcurve/oracle.hpp"
#include "defcurve/series.hpp"

#include <benchmark/benchmark.h>

#include <cstddef>

namespace {

using namespace defcurve;

void BM_DimCyclicSweep(benchmark::State& state) {
  const long long p = state.range(0);
  for (auto _ : state) {
    long long acc = 0;
    for (long long n = 1; n <= 24; ++n) {
      if (n % p == 0) continue;
      for (long long a = -24; a <= 24; ++a) acc += dim_h1_cyclic(p, n, a);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_DimCyclicSweep)->Arg(5)->Arg(13);

void BM_OracleCyclic(benchmark::State& state) {
  const FiniteField field(5, 1);
  const long long n = state.range(0);
  for (auto _ : state) {
    const H1Result result = h1_cyclic_bruteforce(field, n, field.one(), -n - 1);
    benchmark::DoNotOptimize(result.dimension);
  }
}
BENCHMARK(BM_OracleCyclic)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_KernelDimension(benchmark::State& state) {
  const FiniteField field(7, 1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  FieldMatrix m(field, n, n);
  // Deterministic fill with a rank deficiency: row i is i*j + (i + j) mod 7.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = field.from_int(static_cast<long long>(i * j + i + j));
  for (auto _ : state) {
    FieldMatrix copy = m;
    benchmark::DoNotOptimize(kernel_dimension(copy));
  }
}
BENCHMARK(BM_KernelDimension)->Arg(32)->Arg(96)->Unit(benchmark::kMicrosecond);

void BM_ApplyAut(benchmark::State& state) {
  const FiniteField field(5, 1);
  const long long precision = state.range(0);
  const ArtinSchreierAut sigma(field, 3, field.one());
  const TruncatedLaurent f =
      TruncatedLaurent::monomial(field, field.one(), -4, precision);
  for (auto _ : state) {
    const TruncatedLaurent image = apply_aut(sigma, f);
    benchmark::DoNotOptimize(image.valuation());
  }
}
BENCHMARK(BM_ApplyAut)->Arg(64)->Arg(192)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
