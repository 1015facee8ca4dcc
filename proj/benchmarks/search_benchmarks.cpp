#include <benchmark/benchmark.h>

#include "searchkit/blocksworld.hpp"
#include "searchkit/crossword.hpp"
#include "searchkit/datasets.hpp"
#include "searchkit/game24.hpp"
#include "searchkit/prontoqa.hpp"

using namespace searchkit;

namespace {

void BM_game24_bfs(benchmark::State &state) {
    const game24::Instance instance{{4, 7, 8, 8}, 24};
    for (auto _ : state) {
        auto outcome = game24::solve(instance);
        benchmark::DoNotOptimize(outcome.generated);
    }
}
BENCHMARK(BM_game24_bfs);

void BM_game24_exhaust(benchmark::State &state) {
    auto problem = game24::make_problem({{1, 5, 5, 5}, 24});
    problem.is_goal = [](const game24::State &) { return false; };
    for (auto _ : state) {
        auto outcome = bfs(problem);
        benchmark::DoNotOptimize(outcome.expanded);
    }
}
BENCHMARK(BM_game24_exhaust);

void BM_blocksworld_bfs(benchmark::State &state) {
    const int blocks = static_cast<int>(state.range(0));
    auto dataset = datasets::gen_blocksworld(1, blocks, 7);
    auto instance = blocksworld::parse_problem(dataset.files[0].contents);
    auto problem = blocksworld::make_problem(instance);
    for (auto _ : state) {
        auto outcome = bfs(problem);
        benchmark::DoNotOptimize(outcome.expanded);
    }
}
BENCHMARK(BM_blocksworld_bfs)->Arg(4)->Arg(5)->Arg(6);

void BM_blocksworld_enumerate(benchmark::State &state) {
    auto dataset = datasets::gen_blocksworld(1, static_cast<int>(state.range(0)), 11);
    auto instance = blocksworld::parse_problem(dataset.files[0].contents);
    for (auto _ : state) {
        benchmark::DoNotOptimize(blocksworld::count_reachable(instance.init));
    }
}
BENCHMARK(BM_blocksworld_enumerate)->Arg(4)->Arg(5);

void BM_crossword_dfs(benchmark::State &state) {
    auto dataset = datasets::gen_crossword(1, 13, 9);
    auto spec = crossword::parse_spec(dataset.files[0].contents);
    auto problem = crossword::make_problem(spec);
    for (auto _ : state) {
        auto outcome = dfs(problem);
        benchmark::DoNotOptimize(outcome.expanded);
    }
}
BENCHMARK(BM_crossword_dfs);

void BM_prontoqa_prove(benchmark::State &state) {
    auto dataset =
        datasets::gen_prontoqa(1, static_cast<int>(state.range(0)), 4, 17);
    auto tasks = prontoqa::parse_tasks(dataset.files[0].contents);
    for (auto _ : state) {
        auto verdict = prontoqa::prove(tasks[0]);
        benchmark::DoNotOptimize(verdict.answer);
    }
}
BENCHMARK(BM_prontoqa_prove)->Arg(3)->Arg(6);

void BM_oracle_game24(benchmark::State &state) {
    const game24::Instance instance{{3, 7, 11, 13}, 24};
    for (auto _ : state) {
        benchmark::DoNotOptimize(datasets::oracle_game24(instance));
    }
}
BENCHMARK(BM_oracle_game24);

}  // namespace

BENCHMARK_MAIN();
