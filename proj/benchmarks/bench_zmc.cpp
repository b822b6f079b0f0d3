#include "zmc/hydro.hpp"
#include "zmc/metric.hpp"
#include "zmc/ong.hpp"
#include "zmc/slices.hpp"
#include "zmc/surfaces.hpp"
#include "zmc/symalg.hpp"

#include <benchmark/benchmark.h>

using namespace zmc;

static void BM_MCNumeratorClassB(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  const auto eta = DiagonalMetric::minkowski(D);
  const auto g = partner_metric_for_class_b(D, eta);
  const auto chi = symalg::chi_ansatz(2, g);
  for (auto _ : state) benchmark::DoNotOptimize(symalg::mc_numerator(chi, eta));
}
BENCHMARK(BM_MCNumeratorClassB)->Arg(4)->Arg(6)->Arg(8);

static void BM_MCNumeratorClassA(benchmark::State& state) {
  const auto fam = surfaces::SolutionFamily::make(ClassTag::A, static_cast<int>(state.range(0)), 1.0);
  const auto f = surfaces::field(fam);
  for (auto _ : state) benchmark::DoNotOptimize(symalg::mc_numerator(f, fam.eta));
}
BENCHMARK(BM_MCNumeratorClassA)->DenseRange(3, 8);

static void BM_SampleCloud(benchmark::State& state) {
  const auto fam = surfaces::SolutionFamily::make(ClassTag::A, 6, 1.0);
  surfaces::CloudOptions opts;
  opts.count = static_cast<std::size_t>(state.range(0));
  opts.t_max = 3.0;
  for (auto _ : state) benchmark::DoNotOptimize(surfaces::sample_cloud(fam, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleCloud)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_KappaMax(benchmark::State& state) {
  const slices::Profile p{static_cast<int>(state.range(0)), 1.0};
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.kappa_max(t));
    t = t < 10.0 ? t * 1.01 : 0.1;
  }
}
BENCHMARK(BM_KappaMax)->Arg(2)->Arg(4);

static void BM_Integrate(benchmark::State& state) {
  const slices::Profile p{2, 1.0};
  const double h = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ong::integrate(0.5, 0.3, 3.0, p, h));
}
BENCHMARK(BM_Integrate)->Arg(100)->Arg(1000);

static void BM_OngFamily(benchmark::State& state) {
  const slices::Profile p{2, 1.0};
  const auto labels = ong::interior_labels(p, 0.5, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto family = ong::integrate_family(labels, 0.5, 3.0, p);
    benchmark::DoNotOptimize(ong::orthogonality_residual(family, 3.0));
  }
}
BENCHMARK(BM_OngFamily)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_HydroResidual(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const auto p = hydro::p_solution(hydro::SimilarityFamily::make(M, hydro::Branch::minus));
  for (auto _ : state) benchmark::DoNotOptimize(hydro::eq18_residual(p, M));
}
BENCHMARK(BM_HydroResidual)->Arg(2)->Arg(8);

BENCHMARK_MAIN();
