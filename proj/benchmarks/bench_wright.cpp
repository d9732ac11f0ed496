#include <benchmark/benchmark.h>

#include <complex>

#include "wright/eval.hpp"
#include "wright/pde.hpp"
#include "wright/selector.hpp"
#include "wright/series.hpp"

namespace {

void BM_WrightEvalRealMu(benchmark::State& state) {
    wright::WrightOrder order{-0.5, {0.5, 0.0}};
    double x = 0.0;
    for (auto _ : state) {
        x = x >= 5.0 ? 0.25 : x + 0.25;
        benchmark::DoNotOptimize(wright::wright_eval(order, {1.0, x}).value);
    }
}
BENCHMARK(BM_WrightEvalRealMu);

void BM_WrightEvalComplexMu(benchmark::State& state) {
    wright::WrightOrder order{-0.5, {0.5, 1.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(wright::wright_eval(order, {1.0, 2.0}).value);
    }
}
BENCHMARK(BM_WrightEvalComplexMu);

void BM_SelectContourClosedForm(benchmark::State& state) {
    const auto tol = wright::ToleranceProfile::defaults();
    for (auto _ : state) {
        benchmark::DoNotOptimize(wright::select_contour({0.5, 0.0}, 1.0, tol));
    }
}
BENCHMARK(BM_SelectContourClosedForm);

void BM_SelectContourBrent(benchmark::State& state) {
    const auto tol = wright::ToleranceProfile::defaults();
    for (auto _ : state) {
        benchmark::DoNotOptimize(wright::select_contour({10.0, 0.0}, 1.0, tol));
    }
}
BENCHMARK(BM_SelectContourBrent);

void BM_SeriesCoefficients(benchmark::State& state) {
    const int terms = static_cast<int>(state.range(0));
    for (auto _ : state) {
        wright::WrightSeries series(-0.5, {0.5, 0.0}, terms);
        benchmark::DoNotOptimize(series.coefficient(terms - 1));
    }
}
BENCHMARK(BM_SeriesCoefficients)->Arg(100)->Arg(1000);

void BM_SeriesEval(benchmark::State& state) {
    wright::WrightSeries series(-0.5, {0.5, 0.0}, 1000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(series.eval(-2.0, 1e-20).value);
    }
}
BENCHMARK(BM_SeriesEval);

void BM_CauchySolve256(benchmark::State& state) {
    const int n = 256;
    const double dx = 10.0 / n;
    wright::GridFunction g = wright::GridFunction::zeros(-5.0, dx, n);
    for (int i = 0; i < n; ++i) g.values[size_t(i)] = std::fabs(g.x(i)) <= 1.0 ? 1.0 : 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wright::pde::cauchy_solve({0.5, 1.0, g, std::nullopt}, 1.0));
    }
}
BENCHMARK(BM_CauchySolve256);

}  // namespace

BENCHMARK_MAIN();
