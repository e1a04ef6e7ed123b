#include <gammahom/catalog.hpp>
#include <gammahom/hom.hpp>
#include <gammahom/verify.hpp>

#include <benchmark/benchmark.h>

using namespace gammahom;

namespace {

auto chain(std::size_t n) -> Digraph
{
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i; j < n; ++j)
            arcs.push_back({i, j});
    return Digraph{n, arcs};
}

auto bm_count_chain_into_chain(benchmark::State & state)
{
    auto g = chain(static_cast<std::size_t>(state.range(0)));
    auto h = chain(6);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_homs(g, h, HomMode::All));
}
BENCHMARK(bm_count_chain_into_chain)->DenseRange(4, 10, 2);

auto bm_count_strict_parallel(benchmark::State & state)
{
    auto g = chain(8);
    auto h = chain(10);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_homs(g, h, HomMode::Strict, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(bm_count_strict_parallel)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

// generate() memoizes per class, so after the first iteration this times the lookup.
auto bm_generate_posets_cached(benchmark::State & state)
{
    ClassSpec spec{ClassKind::Posets, static_cast<std::size_t>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(generate(spec, CatalogBudget::defaults()));
}
BENCHMARK(bm_generate_posets_cached)->DenseRange(3, 5);

auto bm_canonical_form(benchmark::State & state)
{
    auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        arcs.push_back({i, static_cast<Vertex>((i * 3 + 1) % n)});
    Digraph g{n, arcs};
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(bm_canonical_form)->DenseRange(4, 8, 2);

auto bm_strict_dominance_posets(benchmark::State & state)
{
    auto posets = generate({ClassKind::Posets, 4}, CatalogBudget::defaults());
    VerifyOptions opts{1, false, CatalogBudget::defaults()};
    for (auto _ : state)
        benchmark::DoNotOptimize(check_strict_dominance(posets[5], posets[20], {ClassKind::Posets, 4}, opts));
}
BENCHMARK(bm_strict_dominance_posets);

}

BENCHMARK_MAIN();
