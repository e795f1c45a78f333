#include <benchmark/benchmark.h>

#include "pgd/core.hpp"
#include "pgd/division.hpp"
#include "pgd/engine.hpp"
#include "pgd/generate.hpp"

using namespace pgd;

namespace {

void BM_Generate(benchmark::State& state) {
    const int players = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        Instance inst = generate_instance(players, players + players / 4 + 1, 4, seed++);
        benchmark::DoNotOptimize(inst);
    }
}
BENCHMARK(BM_Generate)->Arg(10)->Arg(100)->Arg(1000);

void BM_ShapeUpRound(benchmark::State& state) {
    Instance inst = generate_instance(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(0)) + 20, 4, 7);
    TableState table = new_table(inst);
    for (auto _ : state) {
        RoundOutcome out = shape_up_round(table);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_ShapeUpRound)->Arg(10)->Arg(100)->Arg(1000);

void BM_RunToStability(benchmark::State& state) {
    const int players = static_cast<int>(state.range(0));
    Instance inst = generate_instance(players, players + players / 4 + 1, 4, 7);
    TableState table = new_table(inst);
    const int cap = default_max_round_pairs(4, players);
    for (auto _ : state) {
        RunResult run = run_to_stability(table, cap);
        benchmark::DoNotOptimize(run);
    }
}
BENCHMARK(BM_RunToStability)->Arg(10)->Arg(100)->Arg(1000);

void BM_Divide(benchmark::State& state) {
    const int players = static_cast<int>(state.range(0));
    Instance inst = generate_instance(players, players + players / 4 + 1,
                                      static_cast<int>(state.range(1)), 7);
    for (auto _ : state) {
        DivisionOutcome out = divide(inst);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_Divide)->Args({50, 4})->Args({200, 4})->Args({200, 6});

} // namespace

BENCHMARK_MAIN();
