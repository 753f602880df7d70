#include "rht/immersion.hpp"
#include "rht/samples.hpp"

#include <benchmark/benchmark.h>

using namespace rht;

namespace {

void BM_StiefelCohomology(benchmark::State& state)
{
    auto method = state.range(0) == 0 ? RankMethod::Sparse : RankMethod::Dense;
    FreeCdga v = stiefel_model(6, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(cohomology(v, 40, {method, false, 0}));
}
BENCHMARK(BM_StiefelCohomology)->Arg(0)->Arg(1)->ArgNames({"dense"})->Unit(benchmark::kMillisecond);

void BM_FramedCohomology(benchmark::State& state)
{
    auto method = state.range(1) == 0 ? RankMethod::Sparse : RankMethod::Dense;
    RelativeModel f = framed_bundle_model(named_manifold("CP2"), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(cohomology(f, static_cast<int>(state.range(0)), {method, false, 0}));
}
BENCHMARK(BM_FramedCohomology)
    ->ArgsProduct({{14, 24}, {0, 1}})
    ->ArgNames({"N", "dense"})
    ->Unit(benchmark::kMillisecond);

void BM_Reduction(benchmark::State& state)
{
    auto M = product_manifold(named_manifold("CP2"), sphere_manifold(3));
    for (auto _ : state) {
        auto u = unreduced_framed_model(M, 3);
        benchmark::DoNotOptimize(is_quasi_iso(u.reduction, 20));
    }
}
BENCHMARK(BM_Reduction)->Unit(benchmark::kMillisecond);

void BM_Immersion(benchmark::State& state)
{
    auto M = named_manifold("S2xS3");
    for (auto _ : state)
        benchmark::DoNotOptimize(immersion_components(M, static_cast<int>(state.range(0)), 20));
}
BENCHMARK(BM_Immersion)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
