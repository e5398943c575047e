#include <benchmark/benchmark.h>

#include <monogenica/cauchy.hpp>
#include <monogenica/fields.hpp>
#include <monogenica/monogenic.hpp>
#include <monogenica/multivector.hpp>
#include <monogenica/spectrum.hpp>

#include <random>
#include <vector>

namespace {

using namespace monogenica;

Multivector random_mv(const Signature& sig, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  Multivector a(sig);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = u(rng);
  return a;
}

void BM_GeometricProduct(benchmark::State& state) {
  auto sig = euclidean(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(11);
  auto a = random_mv(sig, rng);
  auto b = random_mv(sig, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_GeometricProduct)->Arg(3)->Arg(6)->Arg(8)->Arg(10);

void BM_Reverse(benchmark::State& state) {
  auto sig = euclidean(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(12);
  auto a = random_mv(sig, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reverse(a));
  }
}
BENCHMARK(BM_Reverse)->Arg(6)->Arg(10);

void BM_PolyEval(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  auto mis = multi_indices(3, k);
  auto poly = build_poly(mis.front());
  std::vector<double> x{0.3, -0.2, 0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_poly(poly, x));
  }
}
BENCHMARK(BM_PolyEval)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_SphereQuadrature(benchmark::State& state) {
  auto region = make_ball(3, {0.0, 0.0, 0.0}, 1.0);
  const int budget = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_quadrature(region, budget));
  }
}
BENCHMARK(BM_SphereQuadrature)->Arg(512)->Arg(8192);

void BM_CauchyReconstruct(benchmark::State& state) {
  auto region = make_ball(3, {0.0, 0.0, 0.0}, 1.0);
  auto quad = make_quadrature(region, static_cast<int>(state.range(0)));
  auto trace = sample_trace(z_field(1, 2, 3), quad);
  std::vector<double> x{0.2, 0.1, -0.3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cauchy_reconstruct(trace, x));
  }
}
BENCHMARK(BM_CauchyReconstruct)->Arg(512)->Arg(2048)->Arg(8192);

void BM_SeriesCoefficients(benchmark::State& state) {
  auto region = make_ball(3, {0.0, 0.0, 0.0}, 1.0);
  auto quad = make_quadrature(region, 512);
  auto trace = sample_trace(z_field(1, 2, 3), quad);
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_coefficients(trace, K));
  }
}
BENCHMARK(BM_SeriesCoefficients)->Arg(1)->Arg(2);

void BM_RecoverPoint(benchmark::State& state) {
  std::vector<double> x{0.4, -0.1, 0.2, 0.5};
  auto table = character_from_point(x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(recover_point(table));
  }
}
BENCHMARK(BM_RecoverPoint);

}  // namespace

BENCHMARK_MAIN();
