#include "chowdeg/eval.hpp"
#include "chowdeg/forest.hpp"
#include "chowdeg/generators.hpp"
#include "chowdeg/loaded_tree.hpp"
#include "chowdeg/monomial.hpp"
#include "chowdeg/reduction.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>

namespace {

using namespace chowdeg;

std::string caterpillar_text(int n) {
    return tree_to_monomial(clever_caterpillar(n)).render();
}

void BM_Parse(benchmark::State& state) {
    std::string text = caterpillar_text(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Monomial m = Monomial::parse(text);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_Parse)->Arg(100)->Arg(200)->Arg(400)->Arg(1000);

void BM_Screen(benchmark::State& state) {
    Monomial m = Monomial::parse(caterpillar_text(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.first_quadratic_pair());
        benchmark::DoNotOptimize(m.is_clever());
    }
}
BENCHMARK(BM_Screen)->Arg(100)->Arg(200)->Arg(400)->Arg(1000);

void BM_MonomialToTree(benchmark::State& state) {
    Monomial m = Monomial::parse(caterpillar_text(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        LoadedTree t = monomial_to_tree(m);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_MonomialToTree)->Arg(100)->Arg(200)->Arg(400)->Arg(1000);

void BM_ForestValue(benchmark::State& state) {
    LoadedTree t = clever_caterpillar(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        RedundancyForest f = redundancy_forest(t);
        Int v = forest_value(f);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ForestValue)->Arg(100)->Arg(200)->Arg(400)->Arg(1000);

void BM_EndToEnd(benchmark::State& state) {
    std::string text = caterpillar_text(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        EvalReport r = evaluate_monomial_text(text, true);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_EndToEnd)->Arg(100)->Arg(200)->Arg(400)->Arg(1000);

void BM_SunLike(benchmark::State& state) {
    std::vector<int> weights(static_cast<size_t>(state.range(0)), 2);
    Monomial m = tree_to_monomial(sun_like_tree(weights));
    for (auto _ : state) {
        IntegralValue v = integral_value(m);
        benchmark::DoNotOptimize(v.value);
    }
}
BENCHMARK(BM_SunLike)->Arg(8)->Arg(16)->Arg(32);

void BM_Oracle(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937 rng(7u);
    Monomial m = tree_to_monomial(random_proper_tree(n, rng));
    for (auto _ : state) {
        Int v = oracle_value(m, n);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_Oracle)->Arg(6)->Arg(7)->Arg(8);

} // namespace

BENCHMARK_MAIN();
