#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "linecrit/critical.hpp"
#include "linecrit/digraph.hpp"
#include "linecrit/exactint.hpp"

namespace {

using namespace linecrit;

IntMatrix dense_square(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<long long> entry(-50, 50);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

void bench_smith_normal_form(benchmark::State& state) {
  const IntMatrix m = dense_square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(bench_smith_normal_form)->Arg(4)->Arg(8)->Arg(16);

void bench_hermite_normal_form(benchmark::State& state) {
  const IntMatrix m = dense_square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(bench_hermite_normal_form)->Arg(4)->Arg(8)->Arg(16);

void bench_determinant(benchmark::State& state) {
  const IntMatrix m = dense_square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(bench_determinant)->Arg(8)->Arg(16)->Arg(32);

void bench_line_graph(benchmark::State& state) {
  const GeneratedInstance inst =
      random_k_out_regular(static_cast<int>(state.range(0)), 3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(line_graph(inst.graph));
}
BENCHMARK(bench_line_graph)->Arg(8)->Arg(32)->Arg(128);

void bench_critical_group(benchmark::State& state) {
  const GeneratedInstance inst =
      random_k_out_regular(static_cast<int>(state.range(0)), 2, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(critical_group(inst.graph, inst.base.sink));
}
BENCHMARK(bench_critical_group)->Arg(6)->Arg(10)->Arg(16);

void bench_kappa(benchmark::State& state) {
  const GeneratedInstance inst =
      random_k_out_regular(static_cast<int>(state.range(0)), 2, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(kappa(inst.graph, inst.base.sink));
}
BENCHMARK(bench_kappa)->Arg(8)->Arg(16)->Arg(32);

void bench_verify_main_theorem(benchmark::State& state) {
  const GeneratedInstance inst = random_k_out_regular(
      static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_main_theorem(inst.graph, inst.base));
}
BENCHMARK(bench_verify_main_theorem)->Args({6, 2})->Args({8, 3});

}  // namespace

BENCHMARK_MAIN();
