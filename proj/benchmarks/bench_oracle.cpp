#include <benchmark/benchmark.h>

#include "helpers.hpp"
#include "levi/oracle.hpp"

using namespace levi;

// full exhaustive scan on the 4-element semilattice, 2^8 (g,h) pairs
static void BM_solve_all_sl2_gf2(benchmark::State& state) {
    const ProblemSpec spec = levi::testing::sl2_spec(Field::gf(2));
    OracleOptions opts;
    opts.workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_all(spec, opts));
}
BENCHMARK(BM_solve_all_sl2_gf2)->Arg(1)->Arg(2);

// 3^8 pairs through the generic residue path
static void BM_solve_all_sl2_gf3(benchmark::State& state) {
    const ProblemSpec spec = levi::testing::sl2_spec(Field::gf(3));
    OracleOptions opts;
    opts.workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_all(spec, opts));
}
BENCHMARK(BM_solve_all_sl2_gf3)->Arg(1)->Arg(2);

// 2^16 pairs on the 8-element semilattice: the packed-word inner loop
static void BM_solve_all_sl3_gf2(benchmark::State& state) {
    const ProblemSpec spec = levi::testing::sl3_spec(Field::gf(2), {{1, 2}, {3, 4}});
    OracleOptions opts;
    opts.workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_all(spec, opts));
}
BENCHMARK(BM_solve_all_sl3_gf2)->Arg(1)->Arg(2);

static void BM_compare_sl2_gf3(benchmark::State& state) {
    const ProblemSpec spec = levi::testing::sl2_spec(Field::gf(3));
    for (auto _ : state) benchmark::DoNotOptimize(compare(spec));
}
BENCHMARK(BM_compare_sl2_gf3);

static void BM_sweep_families_sl2_gf3(benchmark::State& state) {
    const ProblemSpec spec = levi::testing::sl2_spec(Field::gf(3));
    for (auto _ : state) benchmark::DoNotOptimize(sweep_families(spec));
}
BENCHMARK(BM_sweep_families_sl2_gf3);

BENCHMARK_MAIN();
