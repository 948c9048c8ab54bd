#include <benchmark/benchmark.h>

#include <random>

#include "sogamma/charvar.hpp"
#include "sogamma/gamma.hpp"
#include "sogamma/linalg.hpp"
#include "sogamma/socx.hpp"

using namespace sogamma;

namespace {

QMatrix random_sparse(std::size_t n, int fill_percent, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pct(1, 100), val(-9, 9);
  QMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (pct(rng) <= fill_percent) m.add(r, c, Rational(val(rng)));
  return m;
}

QMatrix gamma_matrix(int n, int i) {
  const auto sys = detail::positive_system(build_yn(n), i);
  QMatrix m = sys.d;
  for (int j = 0; j + 1 < i; ++j) m = stack(m, sys.d1_u[static_cast<std::size_t>(j)]);
  return m;
}

void BM_RrefSerialRandom(benchmark::State& st) {
  const auto m = random_sparse(static_cast<std::size_t>(st.range(0)), 5, 1);
  for (auto _ : st) benchmark::DoNotOptimize(linalg::serial::rref(m));
}

void BM_RrefParallelRandom(benchmark::State& st) {
  const auto m = random_sparse(static_cast<std::size_t>(st.range(0)), 5, 1);
  for (auto _ : st) benchmark::DoNotOptimize(linalg::parallel::rref(m));
}

void BM_RrefSerialY5(benchmark::State& st) {
  const auto m = gamma_matrix(5, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(linalg::serial::rref(m));
}

void BM_RrefParallelY5(benchmark::State& st) {
  const auto m = gamma_matrix(5, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(linalg::parallel::rref(m));
}

void BM_CensusSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(charvar::serial::enumerate_components(static_cast<int>(st.range(0))));
}

void BM_CensusParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(charvar::parallel::enumerate_components(static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_RrefSerialRandom)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefParallelRandom)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefSerialY5)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefParallelY5)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
