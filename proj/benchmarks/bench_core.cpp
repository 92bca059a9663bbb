#include <benchmark/benchmark.h>

#include "demroots/horospherical.hpp"
#include "demroots/rank_one.hpp"
#include "demroots/toric.hpp"

namespace {

using namespace demroots;

IntVec v(std::initializer_list<long long> xs) {
    IntVec r;
    for (long long x : xs) r.emplace_back(x);
    return r;
}

IntMat identity(std::size_t n) {
    std::vector<IntVec> rows(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return IntMat(rows, n);
}

void BM_DualCone_Rank3(benchmark::State& state) {
    for (auto _ : state) {
        Cone c(3, {v({1, 0, 0}), v({0, 1, 0}), v({1, 0, -1})});
        benchmark::DoNotOptimize(dual_cone(c).generators().size());
    }
}
BENCHMARK(BM_DualCone_Rank3);

void BM_DualCone_Rank4(benchmark::State& state) {
    for (auto _ : state) {
        Cone c(4, {v({2, 1, 0, 0}), v({0, 3, 1, -1}), v({1, 0, 2, 1}), v({-1, 1, 0, 3}),
                   v({1, 1, 1, 1}), v({3, -1, 1, 0})});
        benchmark::DoNotOptimize(dual_cone(c).generators().size());
    }
}
BENCHMARK(BM_DualCone_Rank4);

void BM_EnumerateRoots_Orthant3(benchmark::State& state) {
    std::vector<IntVec> id = {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})};
    ConeLattice cl(3, identity(3), id);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_roots(cl, Box(state.range(0))).size());
    }
}
BENCHMARK(BM_EnumerateRoots_Orthant3)->Arg(3)->Arg(5);

void BM_WeightMonoid_Construction(benchmark::State& state) {
    for (auto _ : state) {
        WeightMonoid m(2, {v({1, -1}), v({0, -2})});
        benchmark::DoNotOptimize(m.saturation_verified());
    }
}
BENCHMARK(BM_WeightMonoid_Construction);

void BM_ExpAction(benchmark::State& state) {
    auto monoid =
        std::make_shared<const WeightMonoid>(2, std::vector<IntVec>{v({1, 0}), v({0, 1})});
    ToricLND d(monoid, v({-1, 2}));
    AlgebraElement f = AlgebraElement::monomial(v({6, 2}));
    Rat s(3, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_action(d, s, f).terms.size());
    }
}
BENCHMARK(BM_ExpAction);

void BM_RankOneClassification(benchmark::State& state) {
    RankOneDatum datum(3, v({2, 0, 0}), v({1, 0, 0}), {v({1, 1, 0}), v({0, 0, 1})});
    for (auto _ : state) {
        benchmark::DoNotOptimize(classification_report(datum, Box(state.range(0))).vertical.size());
    }
}
BENCHMARK(BM_RankOneClassification)->Arg(3)->Arg(5);

void BM_MovingWitness(benchmark::State& state) {
    HoroDatum h(3, {v({1, 1, 0}), v({0, 0, 1})}, {v({1, 0, 0})});
    IntVec rho = g_stable_divisor_rays(h)[0];
    for (auto _ : state) {
        benchmark::DoNotOptimize(moving_witness(h, rho, Box(5)).e.size());
    }
}
BENCHMARK(BM_MovingWitness);

}  // namespace

BENCHMARK_MAIN();
