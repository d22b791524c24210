// Microbenchmarks for the closure engine and the graph pipeline. Inputs are
// seeded, so numbers are comparable across runs and machines.

#include <benchmark/benchmark.h>

#include "lcanet/canonical.hpp"
#include "lcanet/closure.hpp"
#include "lcanet/dag.hpp"
#include "lcanet/oracle.hpp"
#include "lcanet/relation.hpp"

using namespace lcanet;

namespace {

Relation seeded_relation(std::size_t leaf_count, double density, std::uint64_t seed) {
    return random_relation({leaf_count, density, seed, RandomSpec::Mode::relation});
}

Dag seeded_dag(std::size_t leaf_count, double density, std::uint64_t seed) {
    return random_dag({leaf_count, density, seed, RandomSpec::Mode::dag});
}

} // namespace

static void BM_PlusClosure(benchmark::State& state) {
    Relation R = seeded_relation(static_cast<std::size_t>(state.range(0)), 0.02, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(plus_closure(R));
    state.SetLabel(std::to_string(R.size()) + " facts");
}
BENCHMARK(BM_PlusClosure)->Arg(8)->Arg(16)->Arg(25);

static void BM_NaivePlusClosure(benchmark::State& state) {
    Relation R = seeded_relation(static_cast<std::size_t>(state.range(0)), 0.02, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(naive_plus_closure(R));
}
BENCHMARK(BM_NaivePlusClosure)->Arg(8);

// Full decision procedure on a guaranteed-realizable input: relations
// extracted from a DAG are exactly the ones the pipeline accepts.
static void BM_Realize(benchmark::State& state) {
    Relation R = extract_leq(seeded_dag(static_cast<std::size_t>(state.range(0)), 0.3, 7));
    for (auto _ : state)
        benchmark::DoNotOptimize(algorithm_real(R));
}
BENCHMARK(BM_Realize)->Arg(8)->Arg(16);

static void BM_TransitiveReduction(benchmark::State& state) {
    Dag G = seeded_dag(static_cast<std::size_t>(state.range(0)), 0.3, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(transitive_reduction(G));
    state.SetLabel(std::to_string(G.vertex_count()) + " vertices");
}
BENCHMARK(BM_TransitiveReduction)->Arg(16)->Arg(32);

static void BM_ExtractLeq(benchmark::State& state) {
    Dag G = seeded_dag(static_cast<std::size_t>(state.range(0)), 0.3, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_leq(G));
}
BENCHMARK(BM_ExtractLeq)->Arg(16)->Arg(32);

static void BM_AllPairLcas(benchmark::State& state) {
    Dag G = seeded_dag(static_cast<std::size_t>(state.range(0)), 0.3, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(all_pair_lcas(G));
}
BENCHMARK(BM_AllPairLcas)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
