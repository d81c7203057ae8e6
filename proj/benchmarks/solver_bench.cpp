#include <benchmark/benchmark.h>

#include "linesum/dpsolver.hpp"
#include "linesum/oracle.hpp"
#include "linesum/random_gen.hpp"
#include "linesum/reconstruct.hpp"

namespace {

using namespace linesum;

void BM_SolveMonotone(benchmark::State& state) {
    const int size = int(state.range(0));
    const Instance inst = random_instance(size, size, -20, 20, 7);
    for (auto _ : state) {
        Solution solution = solve_monotone(inst);
        benchmark::DoNotOptimize(solution.objective);
    }
}
BENCHMARK(BM_SolveMonotone)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Arg(12)
    ->Unit(benchmark::kMillisecond);

void BM_SolveMonotoneSerial(benchmark::State& state) {
    const int size = int(state.range(0));
    const Instance inst = random_instance(size, size, -20, 20, 7);
    SolverOptions options;
    options.parallel = false;
    for (auto _ : state) {
        Solution solution = solve_monotone(inst, options);
        benchmark::DoNotOptimize(solution.objective);
    }
}
BENCHMARK(BM_SolveMonotoneSerial)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SolveTypeK(benchmark::State& state) {
    const Instance inst = random_instance(10, 10, -20, 20, 7);
    const int k = int(state.range(0));
    for (auto _ : state) {
        auto result = solve_type_k(inst, k);
        benchmark::DoNotOptimize(result->objective);
    }
}
BENCHMARK(BM_SolveTypeK)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

// Staircase sums: c = (N, N-1, ..., 1) is self-conjugate, so r = conjugate(c)
// is trivially feasible.
NonincreasingTuple staircase(int size) {
    std::vector<int> entries(size);
    for (int i = 0; i < size; ++i) entries[i] = size - i;
    return NonincreasingTuple(entries, size);
}

void BM_GaleRyser(benchmark::State& state) {
    const int size = int(state.range(0));
    const NonincreasingTuple c = staircase(size);
    const NonincreasingTuple r = conjugate(c);
    for (auto _ : state) {
        BinaryMatrix a = gale_ryser(r, c);
        benchmark::DoNotOptimize(a.size());
    }
}
BENCHMARK(BM_GaleRyser)->Arg(32)->Arg(128)->Arg(512);

void BM_MaxFlowConstruct(benchmark::State& state) {
    const int size = int(state.range(0));
    const NonincreasingTuple c = staircase(size);
    const NonincreasingTuple r = conjugate(c);
    for (auto _ : state) {
        auto a = maxflow_construct(r, c);
        benchmark::DoNotOptimize(a->size());
    }
}
BENCHMARK(BM_MaxFlowConstruct)->Arg(32)->Arg(64)->Arg(128);

void BM_BruteForceMatrix(benchmark::State& state) {
    const Instance inst = random_instance(4, 4, -20, 20, 7);
    for (auto _ : state) {
        auto result = brute_force_matrix(inst, true);
        benchmark::DoNotOptimize(result.objective);
    }
}
BENCHMARK(BM_BruteForceMatrix)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
