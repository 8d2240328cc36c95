// Serial reference vs OpenMP kernels on medium instances.

#include <benchmark/benchmark.h>

#include "mdim/generators.hpp"
#include "mdim/graph.hpp"
#include "mdim/hamming.hpp"
#include "mdim/ich.hpp"
#include "mdim/resolving.hpp"

namespace {

using namespace mdim;

const Graph& er_graph() {
    static const Graph g = erdos_renyi(800, 0.02, RngSeed{1});
    return g;
}

const Graph& ich_graph() {
    static const Graph g = erdos_renyi(400, 0.1, RngSeed{2});
    return g;
}

const DistanceMatrix& ich_matrix() {
    static const DistanceMatrix d = apsp(ich_graph());
    return d;
}

const DistanceMatrix& brute_matrix() {
    static const DistanceMatrix d = apsp(erdos_renyi(26, 0.3, RngSeed{3}));
    return d;
}

const HammingResolvingSet& hamming_set() {
    // Chain a small binary set up to Q_12 (4096 vertices).
    static const HammingResolvingSet set = [] {
        HammingResolvingSet s;
        s.space = HammingSpace::canonical(1, 2);
        s.vertices = {"0"};
        s.mode = HammingVerifiedMode::exhaustive;
        HammingVerifyOptions opts;
        for (int k = 1; k < 12; ++k) s = augment(s, opts);
        return s;
    }();
    return set;
}

void BM_apsp_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(apsp_serial(er_graph()));
}

void BM_apsp_omp(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(apsp(er_graph()));
}

void BM_ich_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ich_run_serial(ich_matrix()));
}

void BM_ich_omp(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ich_run(ich_matrix()));
}

void BM_bruteforce_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(min_resolving_bruteforce_serial(brute_matrix()));
}

void BM_bruteforce_omp(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(min_resolving_bruteforce(brute_matrix()));
}

void BM_hamming_verify_serial(benchmark::State& state) {
    const auto& set = hamming_set();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            verify_hamming_resolving_serial(set.space, set.vertices, true, {}));
}

void BM_hamming_verify_omp(benchmark::State& state) {
    const auto& set = hamming_set();
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_hamming_resolving(set.space, set.vertices, true, {}));
}

BENCHMARK(BM_apsp_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apsp_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ich_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ich_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bruteforce_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bruteforce_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hamming_verify_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hamming_verify_omp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
