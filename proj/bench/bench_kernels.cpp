// Serial reference vs OpenMP kernels, plus batch model comparison.
//   ./bench_kernels --benchmark_filter=Dot

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "rankfit/fit.hpp"
#include "rankfit/generate.hpp"
#include "rankfit/kernels.hpp"

using namespace rankfit;

namespace {

std::vector<double> random_vector(std::size_t n) {
  std::mt19937_64 g(n);
  std::normal_distribution<double> d;
  std::vector<double> v(n);
  for (double& x : v) x = d(g);
  return v;
}

std::vector<double> mandelbrot_logs(std::size_t n) {
  std::vector<double> y(n);
  for (std::size_t r = 1; r <= n; ++r) y[r - 1] = 1.3 * std::log((n + 2.0) / (r + 2.0));
  return y;
}

template <double (*Dot)(std::span<const double>, std::span<const double>)>
void BM_Dot(benchmark::State& state) {
  const auto x = random_vector(static_cast<std::size_t>(state.range(0)));
  const auto y = random_vector(static_cast<std::size_t>(state.range(0)) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(Dot(x, std::span(y).first(x.size())));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <kernels::MandelbrotProfile (*Profile)(std::span<const double>, double)>
void BM_MandelbrotProfile(benchmark::State& state) {
  const auto y = mandelbrot_logs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Profile(y, 2.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<RankedSeries> batch() {
  std::vector<RankedSeries> out;
  for (std::uint64_t seed = 0; seed < 64; ++seed)
    out.push_back(generate_synthetic(BetaLikeParams{0.0273, 0.4058, 0.991, 200}, NoiseSpec{0.05, seed}));
  return out;
}

void BM_CompareManySerial(benchmark::State& state) {
  const auto b = batch();
  for (auto _ : state) benchmark::DoNotOptimize(compare_many_serial(b));
}

void BM_CompareManyOmp(benchmark::State& state) {
  const auto b = batch();
  for (auto _ : state) benchmark::DoNotOptimize(compare_many(b));
}

}  // namespace

BENCHMARK(BM_Dot<kernels::serial::dot>)->Name("Dot/serial")->Range(1 << 10, 1 << 22);
BENCHMARK(BM_Dot<kernels::omp::dot>)->Name("Dot/omp")->Range(1 << 10, 1 << 22);
BENCHMARK(BM_MandelbrotProfile<kernels::serial::mandelbrot_profile>)->Name("MandelbrotProfile/serial")->Range(1 << 10, 1 << 20);
BENCHMARK(BM_MandelbrotProfile<kernels::omp::mandelbrot_profile>)->Name("MandelbrotProfile/omp")->Range(1 << 10, 1 << 20);
BENCHMARK(BM_CompareManySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompareManyOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
