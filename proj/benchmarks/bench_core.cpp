#include "latlab/census.hpp"
#include "latlab/discform.hpp"
#include "latlab/expr.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace latlab;

namespace {

IntMat random_gram(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-4, 4);
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
    return m;
}

void BM_SmithNormalFormRandom(benchmark::State& state) {
    IntMat m = random_gram(int(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m).rank);
}
BENCHMARK(BM_SmithNormalFormRandom)->Arg(6)->Arg(10);

void BM_SmithNormalFormK3(benchmark::State& state) {
    // the rank-22 reference lattice: three hyperbolic planes and two E8 blocks
    Lattice k3 = eval_lattice_expr("U^3 + E8^2").lattice;
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(k3.gram()).rank);
}
BENCHMARK(BM_SmithNormalFormK3);

void BM_GroupOrderBruteForce(benchmark::State& state) {
    const char* exprs[] = {"U + D4^2", "U + A1^6", "U + A1^7"};
    FiniteQuadraticForm q =
        discriminant_form(eval_lattice_expr(exprs[state.range(0)]).lattice);
    for (auto _ : state) benchmark::DoNotOptimize(isometry_group_order(q).value);
}
BENCHMARK(BM_GroupOrderBruteForce)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ShortVectorsE8(benchmark::State& state) {
    Lattice e8 = make_E(8);
    for (auto _ : state) benchmark::DoNotOptimize(short_vectors(e8, state.range(0)).size());
}
BENCHMARK(BM_ShortVectorsE8)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(nikulin_census().count());
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

void BM_HeegnerSearch(benchmark::State& state) {
    Lattice l = eval_lattice_expr("U^2 + D6").lattice;
    for (auto _ : state)
        benchmark::DoNotOptimize(heegner_vectors(l, -4, true, int(state.range(0))).size());
}
BENCHMARK(BM_HeegnerSearch)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
