#include <benchmark/benchmark.h>

#include "helpers.hpp"
#include "levi/func.hpp"

using namespace levi;

static void BM_enumerate_multiplicative_sl3_gf3(benchmark::State& state) {
    const MonoidPtr m = Monoid::meet_semilattice(3);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_multiplicative(m, Field::gf(3)));
}
BENCHMARK(BM_enumerate_multiplicative_sl3_gf3);

// 24-element non-abelian monoid over GF(2): 2^24 candidate space, pruned
static void BM_enumerate_multiplicative_na24_gf2(benchmark::State& state) {
    const MonoidPtr m = Monoid::from_catalog("direct_product(meet_semilattice(2),symmetric3)");
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_multiplicative(m, Field::gf(2)));
}
BENCHMARK(BM_enumerate_multiplicative_na24_gf2);

static void BM_rank_8x8_gf3(benchmark::State& state) {
    const MonoidPtr m = Monoid::meet_semilattice(3);
    std::vector<Func> funcs;
    for (const MulFunc& mu : enumerate_multiplicative(m, Field::gf(3))) funcs.push_back(mu.func());
    for (auto _ : state) benchmark::DoNotOptimize(rank(funcs));
}
BENCHMARK(BM_rank_8x8_gf3);

static void BM_residual_na24(benchmark::State& state) {
    const ProblemSpec spec = levi::testing::na24_spec();
    const Field f = spec.field();
    const auto t = gen_dependent_pair(spec, 1, Scalar::gf(3, 1), Scalar::gf(3, 2),
                                      Scalar::gf(3, 0), Scalar::gf(3, 1),
                                      {Scalar::gf(3, 0), Scalar::gf(3, 2)});
    for (auto _ : state) benchmark::DoNotOptimize(residual(spec, t));
    (void)f;
}
BENCHMARK(BM_residual_na24);
