#include <benchmark/benchmark.h>

#include <cmath>

#include "pfq/integrals.hpp"
#include "pfq/quadrature.hpp"
#include "pfq/series.hpp"
#include "pfq/umbral.hpp"

namespace {

void BM_EvalGauss2F1(benchmark::State& state) {
    const pfq::HypergeometricParams params{{1.0, 1.0}, {2.0}};
    for (auto _ : state)
        benchmark::DoNotOptimize(pfq::eval_pfq(params, 0.5).value);
}
BENCHMARK(BM_EvalGauss2F1);

void BM_EvalNearBoundary(benchmark::State& state) {
    const pfq::HypergeometricParams params{{1.0, 1.0}, {2.0}};
    for (auto _ : state)
        benchmark::DoNotOptimize(pfq::eval_pfq(params, 0.9).value);
}
BENCHMARK(BM_EvalNearBoundary);

void BM_FoxWright(benchmark::State& state) {
    const pfq::FoxWrightParams params{{{1.0, 2.0}}, {{2.0, 2.0}, {3.0, 2.0}}};
    for (auto _ : state)
        benchmark::DoNotOptimize(pfq::eval_fox_wright(params, 1.0).value);
}
BENCHMARK(BM_FoxWright);

void BM_HalfIntegerMoment(benchmark::State& state) {
    const pfq::UmbralSymbol symbol({2.0}, {3.0, 4.0});
    double nu = -0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pfq::vacuum_moment(symbol, nu));
        nu += 1.0;
        if (nu > 40.0) nu = -0.5;
    }
}
BENCHMARK(BM_HalfIntegerMoment);

void BM_GaussianQuadrature(benchmark::State& state) {
    auto f = [](double x) { return std::exp(-x * x); };
    for (auto _ : state)
        benchmark::DoNotOptimize(
            pfq::integrate(f, pfq::RealLine{}, 1e-10, 1e-13).value);
}
BENCHMARK(BM_GaussianQuadrature);

void BM_MellinClosedForm(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(pfq::mellin_integral(2.0, 3.0, 4.0, 0.75));
}
BENCHMARK(BM_MellinClosedForm);

}  // namespace

BENCHMARK_MAIN();
