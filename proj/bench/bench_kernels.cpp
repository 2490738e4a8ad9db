// Serial reference kernels against the OpenMP ones, on operands shaped like
// the real workloads: dense overpartition coefficients times dense or
// pentagonal-sparse series.

#include <benchmark/benchmark.h>

#include <vector>

#include "qlab/kernels.hpp"
#include "qlab/series.hpp"
#include "qlab/special.hpp"

namespace {

const qlab::Series& pbar(std::size_t order) {
  static qlab::Series cached;
  if (cached.order() < order) cached = qlab::overpartition(order);
  return cached;
}

template <bool Parallel>
void BM_Convolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const qlab::Series a = qlab::truncate(pbar(n), n);
  const qlab::Series b = qlab::prefactor_A(n);
  std::vector<mpz_class> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      qlab::kernel::convolve(a.coeffs(), b.coeffs(), out);
    } else {
      qlab::kernel::serial::convolve(a.coeffs(), b.coeffs(), out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(state.range(0));
}

template <bool Parallel>
void BM_SparseMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const qlab::Series a = qlab::truncate(pbar(n), n);
  const auto sparse = *qlab::eta(1, n).small_sparse_terms();
  std::vector<mpz_class> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      qlab::kernel::sparse_mul(a.coeffs(), sparse, out);
    } else {
      qlab::kernel::serial::sparse_mul(a.coeffs(), sparse, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Convolve<false>)->Name("convolve/serial")->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Convolve<true>)->Name("convolve/omp")->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SparseMul<false>)->Name("sparse_mul/serial")->Arg(5000)->Arg(40000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseMul<true>)
    ->Name("sparse_mul/omp")
    ->Arg(5000)
    ->Arg(40000)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
