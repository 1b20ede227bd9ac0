#include <benchmark/benchmark.h>

#include <random>

#include "bimodal/formula.hpp"
#include "bimodal/relations.hpp"
#include "bimodal/solver.hpp"
#include "bimodal/tableau.hpp"

using namespace bimodal;

namespace {

void BM_enumerate_tableau_sets(benchmark::State& state) {
    // Box chains grow the closure linearly and the universe with it.
    std::string text;
    for (int i = 0; i < state.range(0); ++i) text += "[]";
    text += "x0";
    auto table = subformulas(parse(text));
    for (auto _ : state) {
        auto u = enumerate_tableau_sets(table, Logic::S4xS5);
        benchmark::DoNotOptimize(u.size());
    }
}
BENCHMARK(BM_enumerate_tableau_sets)->DenseRange(2, 10, 2);

void BM_solve(benchmark::State& state) {
    const char* formulas[] = {
        "([]x0 & ~x0)",
        "(x0 & <>~x0)",
        "~(K[]x0 -> []Kx0)",
        "([]<>x0 & <>[]~x0)",
    };
    auto f = parse(formulas[state.range(0)]);
    Logic x = static_cast<Logic>(state.range(1));
    auto u = enumerate_tableau_sets(subformulas(f), x);
    SearchOptions opts;
    opts.logic = x;
    opts.memoize = true;
    for (auto _ : state) {
        auto v = solve(u, opts);
        benchmark::DoNotOptimize(v.satisfiable);
    }
}
BENCHMARK(BM_solve)->ArgsProduct({{0, 1, 2, 3}, {0, 1, 2}});

void BM_mcl(benchmark::State& state) {
    std::mt19937 rng(7);
    std::size_t s = static_cast<std::size_t>(state.range(0));
    std::bernoulli_distribution edge(0.3);
    FiniteRelation r(s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (edge(rng)) r.set(i, j);
    r = r.transitive_closure();
    for (auto _ : state) benchmark::DoNotOptimize(mcl(r));
}
BENCHMARK(BM_mcl)->RangeMultiplier(4)->Range(4, 256);

}  // namespace

BENCHMARK_MAIN();
