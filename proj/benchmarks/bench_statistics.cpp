#include <benchmark/benchmark.h>

#include "transorder/dist.hpp"
#include "transorder/gof.hpp"
#include "transorder/ineq.hpp"

using namespace transorder;

namespace {

EmpiricalDist make_sample(std::size_t n) {
    return EmpiricalDist(draw(ParametricModel::weibull(0.8), n, SeedSpec{2, 0}));
}

void bm_stat_convex(benchmark::State& state) {
    const auto sample = make_sample(static_cast<std::size_t>(state.range(0)));
    const auto g = ParametricModel::unit_exponential();
    for (auto _ : state) {
        benchmark::DoNotOptimize(stat_convex(sample, g, KTransform::ApplyG));
    }
}
BENCHMARK(bm_stat_convex)->Arg(50)->Arg(500)->Arg(5000);

void bm_stat_star_restricted(benchmark::State& state) {
    const auto sample = make_sample(static_cast<std::size_t>(state.range(0)));
    const auto g = ParametricModel::unit_exponential();
    for (auto _ : state) {
        benchmark::DoNotOptimize(stat_star(sample, g, KTransform::ApplyG, 0.05));
    }
}
BENCHMARK(bm_stat_star_restricted)->Arg(50)->Arg(500)->Arg(5000);

void bm_gini_lstat(benchmark::State& state) {
    const auto sample = make_sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gini(sample, GiniMethod::LStat));
    }
}
BENCHMARK(bm_gini_lstat)->Arg(256)->Arg(4096);

void bm_gini_pairs(benchmark::State& state) {
    const auto sample = make_sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gini(sample, GiniMethod::Pairs));
    }
}
BENCHMARK(bm_gini_pairs)->Arg(256)->Arg(4096);

void bm_deshpande_j(benchmark::State& state) {
    const auto sample = make_sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(deshpande_j(sample, 0.5));
    }
}
BENCHMARK(bm_deshpande_j)->Arg(50)->Arg(200);

void bm_null_distribution(benchmark::State& state) {
    TestSpec spec;
    spec.kind = TestKind::Star;
    spec.g = ParametricModel::unit_exponential();
    spec.nu = 0.05;
    spec.sims = 200;
    spec.seed = SeedSpec{3, 0};
    spec.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(null_distribution(spec, 100));
    }
    state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(bm_null_distribution)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
