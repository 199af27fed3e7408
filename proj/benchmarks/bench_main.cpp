#include <benchmark/benchmark.h>

#include "ddp/dilog.hpp"
#include "ddp/enumeration.hpp"
#include "ddp/evaluator.hpp"
#include "ddp/qseries.hpp"
#include "ddp/theta.hpp"

#include <complex>

static void BM_BackwardEvaluator(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  ddp::evaluator::EvalOptions opt;
  opt.check_stability = false;
  for (auto _ : state) {
    auto r = ddp::evaluator::eval_G_backward({-1.0 / 9.0, 1.0 / 3.0, eps}, opt);
    benchmark::DoNotOptimize(r.G);
  }
  state.SetItemsProcessed(state.iterations() * ddp::evaluator::tail_order(1.0 / 3.0, eps, opt.tail_cutoff));
}
BENCHMARK(BM_BackwardEvaluator)->Arg(10000)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_FunctionalEquationSeries(benchmark::State& state) {
  for (auto _ : state) {
    auto g = ddp::enumeration::series_from_funeq(static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_FunctionalEquationSeries)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state) {
  for (auto _ : state) {
    auto t = ddp::enumeration::enumerate_bruteforce(state.range(0));
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_BruteForce)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_PhiRatioSeries(benchmark::State& state) {
  for (auto _ : state) {
    auto s = ddp::qseries::phi_ratio_series(static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_PhiRatioSeries)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Theta4(benchmark::State& state) {
  const std::complex<double> s[2] = {{0.7, 0.0}, {-0.4, 0.0}};
  for (auto _ : state) benchmark::DoNotOptimize(ddp::airy::theta(4, s));
}
BENCHMARK(BM_Theta4)->Unit(benchmark::kMicrosecond);

static void BM_Theta4Partials(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ddp::airy::theta4_partials({0.7, 0.0}, {-0.4, 0.0}));
}
BENCHMARK(BM_Theta4Partials)->Unit(benchmark::kMicrosecond);

static void BM_Dilog(benchmark::State& state) {
  std::complex<double> z(0.3, 0.8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ddp::dilog(z));
    z = std::complex<double>(z.imag(), -z.real() + 0.1);
  }
}
BENCHMARK(BM_Dilog);

BENCHMARK_MAIN();
