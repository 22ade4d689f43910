#include "tsg/census/analysis.hpp"
#include "tsg/census/verify.hpp"
#include "tsg/graph/automorphisms.hpp"
#include "tsg/graph/builtins.hpp"
#include "tsg/graph/canonical.hpp"
#include "tsg/graph/family.hpp"
#include "tsg/perm/iso_class.hpp"
#include "tsg/perm/subgroups.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace tsg;

void BM_SubgroupLatticeK33(benchmark::State& state)
{
    const auto aut = graph::automorphism_group(graph::builtin_graph("K33"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(perm::enumerate_subgroups(aut));
    }
}
BENCHMARK(BM_SubgroupLatticeK33)->Unit(benchmark::kMillisecond);

void BM_AutomorphismsP10(benchmark::State& state)
{
    const auto g = graph::builtin_graph("P10");
    for (auto _ : state) {
        benchmark::DoNotOptimize(graph::automorphism_group(g));
    }
}
BENCHMARK(BM_AutomorphismsP10)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state)
{
    const auto g = graph::builtin_graph(graph::builtin_names()[static_cast<std::size_t>(state.range(0))]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(graph::canonical_form(g));
    }
}
BENCHMARK(BM_CanonicalForm)->DenseRange(0, 7);

void BM_FamilyClosure(benchmark::State& state)
{
    const auto g = graph::builtin_graph("K6");
    for (auto _ : state) {
        benchmark::DoNotOptimize(graph::family_closure(g));
    }
}
BENCHMARK(BM_FamilyClosure)->Unit(benchmark::kMillisecond);

void BM_IsoSearch(benchmark::State& state)
{
    const auto aut = graph::automorphism_group(graph::builtin_graph("K33"));
    const auto& reference = perm::catalog_group("(D3xD3):Z2").reference;
    for (auto _ : state) {
        benchmark::DoNotOptimize(perm::find_isomorphism(reference, aut));
    }
}
BENCHMARK(BM_IsoSearch)->Unit(benchmark::kMillisecond);

void BM_AnalyzeK44Minus(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(census::analyze_graph("K44minus"));
    }
}
BENCHMARK(BM_AnalyzeK44Minus)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(census::verify_catalog());
    }
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
