#include <benchmark/benchmark.h>

#include "frustrix/census.hpp"
#include "frustrix/families.hpp"
#include "frustrix/solver.hpp"
#include "frustrix/structure.hpp"

using namespace frustrix;

static void BM_FrustrationBruteforce(benchmark::State& state) {
    SignedGraph chain =
        gadget_chain(std::vector<GadgetKind>(state.range(0), GadgetKind::Triangle));
    for (auto _ : state) benchmark::DoNotOptimize(frustration_bruteforce(chain).f);
    state.SetLabel("n=" + std::to_string(chain.vertex_count()));
}
BENCHMARK(BM_FrustrationBruteforce)->Arg(4)->Arg(6)->Arg(8);

static void BM_FrustrationBranchBound(benchmark::State& state) {
    SignedGraph chain =
        gadget_chain(std::vector<GadgetKind>(state.range(0), GadgetKind::Triangle));
    for (auto _ : state) benchmark::DoNotOptimize(frustration_branch_bound(chain).f);
    state.SetLabel("n=" + std::to_string(chain.vertex_count()));
}
BENCHMARK(BM_FrustrationBranchBound)->Arg(4)->Arg(6)->Arg(8);

static void BM_UnequilibratedCutScan(benchmark::State& state) {
    SignedGraph p = petersen_negative();
    for (auto _ : state) benchmark::DoNotOptimize(find_unequilibrated_cut(p).has_value());
}
BENCHMARK(BM_UnequilibratedCutScan);

static void BM_CanonicalForm(benchmark::State& state) {
    SignedGraph p = petersen_negative().underlying();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(p).cert.size());
}
BENCHMARK(BM_CanonicalForm);

static void BM_CensusCubic(benchmark::State& state) {
    for (auto _ : state) {
        CensusFilter f;
        f.cubic = true;
        benchmark::DoNotOptimize(enumerate_subcubic(static_cast<int>(state.range(0)), f).size());
    }
}
BENCHMARK(BM_CensusCubic)->Arg(8)->Arg(10);

static void BM_ReduceChain(benchmark::State& state) {
    SignedGraph chain =
        gadget_chain(std::vector<GadgetKind>(state.range(0), GadgetKind::Triangle));
    for (auto _ : state) benchmark::DoNotOptimize(reduce_to_fixpoint(chain).total_offset);
}
BENCHMARK(BM_ReduceChain)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
