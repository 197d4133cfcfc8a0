#include <benchmark/benchmark.h>

#include <vector>

#include "transorder/dist.hpp"
#include "transorder/shape.hpp"

using namespace transorder;

namespace {

EmpiricalDist make_sample(std::size_t n) {
    return EmpiricalDist(draw(ParametricModel::weibull(0.8), n, SeedSpec{1, 0}));
}

void bm_transform_graph(benchmark::State& state) {
    const auto sample = make_sample(static_cast<std::size_t>(state.range(0)));
    const auto g = ParametricModel::unit_exponential();
    for (auto _ : state) {
        benchmark::DoNotOptimize(transform_graph(sample, g));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_transform_graph)->Range(64, 16384);

void bm_gcm(benchmark::State& state) {
    const auto graph =
        transform_graph(make_sample(static_cast<std::size_t>(state.range(0))),
                        ParametricModel::unit_exponential());
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcm(graph));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_gcm)->Range(64, 16384);

void bm_gsm(benchmark::State& state) {
    const auto graph =
        transform_graph(make_sample(static_cast<std::size_t>(state.range(0))),
                        ParametricModel::unit_exponential());
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsm(graph));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_gsm)->Range(64, 16384);

void bm_polyline_eval(benchmark::State& state) {
    const auto graph = transform_graph(make_sample(4096), ParametricModel::unit_exponential());
    const auto hull = gcm(graph);
    const double hi = hull.back_x();
    double x = 0.0;
    for (auto _ : state) {
        x += hi / 1024.0;
        if (x > hi) x = 0.0;
        benchmark::DoNotOptimize(hull(x));
    }
}
BENCHMARK(bm_polyline_eval);

}  // namespace
