#include <benchmark/benchmark.h>

#include "quboforge/anneal.hpp"
#include "quboforge/exact.hpp"
#include "quboforge/problems.hpp"
#include "quboforge/qaoa.hpp"
#include "quboforge/random.hpp"

using namespace quboforge;

namespace {

QuboModel random_dense_model(int n, std::uint64_t seed) {
    Rng rng(seed);
    QuboModel m(n);
    for (int i = 0; i < n; ++i) {
        m.add_linear(i, rng.uniform(-10.0, 10.0));
        for (int j = i + 1; j < n; ++j) m.add_term(i, j, rng.uniform(-5.0, 5.0));
    }
    return m.normalized();
}

void BM_Evaluate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QuboModel m = random_dense_model(n, 1);
    const Assignment a(static_cast<std::size_t>(n), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(m, a));
    }
}
BENCHMARK(BM_Evaluate)->Arg(32)->Arg(128);

void BM_SolveExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QuboModel m = random_dense_model(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_exact(m, 4));
    }
}
BENCHMARK(BM_SolveExact)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Anneal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QuboModel m = random_dense_model(n, 3);
    AnnealConfig cfg;
    cfg.restarts = 1;
    cfg.sweeps = 1000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_sa(m, cfg));
    }
}
BENCHMARK(BM_Anneal)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_QaoaCircuit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QuboModel m = random_dense_model(n, 4);
    const std::vector<double> gammas{0.4, 0.8}, betas{0.3, 0.6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_circuit(m, gammas, betas));
    }
}
BENCHMARK(BM_QaoaCircuit)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_NumberPartitioningGenerator(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(5);
    PartitionInstance inst;
    for (int i = 0; i < n; ++i) inst.values.push_back(1 + static_cast<std::int64_t>(rng.below(1000)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(number_partitioning(inst));
    }
}
BENCHMARK(BM_NumberPartitioningGenerator)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
