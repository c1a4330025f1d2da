#include <benchmark/benchmark.h>

#include "kgcoulomb/info_measures.hpp"
#include "kgcoulomb/moments.hpp"
#include "kgcoulomb/quadrature.hpp"
#include "kgcoulomb/special_functions.hpp"

namespace {

void BM_LaguerreOrthonormal(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kgc::laguerre_orthonormal(k, 1.831, x));
    x = x < 40.0 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_LaguerreOrthonormal)->Arg(0)->Arg(3)->Arg(9)->Arg(20);

void BM_GaussLegendre(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kgc::gauss_legendre(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GaussLegendre)->Arg(20)->Arg(128);

void BM_Normalization(benchmark::State& state) {
  const auto system = kgc::make_system(68, kgc::kPionMass);
  const auto density = kgc::kg_density(system, kgc::make_state(static_cast<int>(state.range(0)), 0, 0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kgc::integrate_semi_infinite(
        [&](double r) { return density.value(r) * r * r; }, density.zero_exponent() + 2,
        density.decay_scale(), 1e-10, density.nodes()));
  }
}
BENCHMARK(BM_Normalization)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_Heisenberg(benchmark::State& state) {
  const auto system = kgc::make_system(68, kgc::kPionMass);
  const auto st = kgc::make_state(10, 4, 0);
  for (auto _ : state) benchmark::DoNotOptimize(kgc::heisenberg(system, st));
}
BENCHMARK(BM_Heisenberg);

void BM_ShannonRadial(benchmark::State& state) {
  const auto system = kgc::make_system(68, kgc::kPionMass);
  const auto density = kgc::kg_density(system, kgc::make_state(static_cast<int>(state.range(0)), 1, 0));
  for (auto _ : state) benchmark::DoNotOptimize(kgc::shannon_radial(density));
}
BENCHMARK(BM_ShannonRadial)->Arg(2)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_Fisher(benchmark::State& state) {
  const auto system = kgc::make_system(68, kgc::kPionMass);
  const auto st = kgc::make_state(static_cast<int>(state.range(0)), 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kgc::fisher(system, st, kgc::Theory::klein_gordon));
}
BENCHMARK(BM_Fisher)->Arg(3)->Arg(8)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
