#include <benchmark/benchmark.h>

#include "galmod/cohomology.hpp"
#include "galmod/inertia.hpp"
#include "galmod/search.hpp"
#include "galmod/semigroup.hpp"

using namespace galmod;

static void BM_ActionClosure(benchmark::State& state) {
    FinAbGroup m = FinAbGroup::make({static_cast<i64>(state.range(0))});
    for (auto _ : state)
        benchmark::DoNotOptimize(ActionGroup::unit_multiplication(m).size());
}
BENCHMARK(BM_ActionClosure)->Arg(30)->Arg(60)->Arg(100);

static void BM_ChiClosure(benchmark::State& state) {
    FinAbGroup m = FinAbGroup::make({7, 49});
    std::vector<std::pair<Mat, i64>> gens = {{{{3, 1}, {0, 1}}, 3}};
    for (auto _ : state)
        benchmark::DoNotOptimize(CyclotomicContext::close(7, 343, m, gens).size());
}
BENCHMARK(BM_ChiClosure);

static void BM_H1(benchmark::State& state) {
    FinAbGroup m = FinAbGroup::make({static_cast<i64>(state.range(0))});
    ActionGroup g = ActionGroup::unit_multiplication(m);
    for (auto _ : state) {
        CocycleSpace c(g);
        benchmark::DoNotOptimize(c.h1_order());
    }
}
BENCHMARK(BM_H1)->Arg(16)->Arg(27)->Arg(32);

static void BM_GapSieve(benchmark::State& state) {
    for (auto _ : state) {
        NumericalSemigroup s({static_cast<i64>(state.range(0)),
                              static_cast<i64>(state.range(0)) + 2});
        benchmark::DoNotOptimize(s.genus());
    }
}
BENCHMARK(BM_GapSieve)->Arg(101)->Arg(501);

static void BM_PointCount(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(count_curve_points(state.range(0), 4).count);
}
BENCHMARK(BM_PointCount)->Arg(199)->Arg(1999)->Arg(19997);

BENCHMARK_MAIN();
