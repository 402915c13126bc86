// Serial reference vs OpenMP kernels on realistic workloads: the closure of
// the 13-vector d=3 family (hundreds of rays with rational entries), clique
// search, and the exhaustive coloring scan.

#include <benchmark/benchmark.h>

#include "ksadist/analysis.hpp"
#include "ksadist/datasets.hpp"

using namespace ksadist;

namespace {

const Pool<Cyclotomic>& grown_pool() {
    static Pool<Cyclotomic> pool = [] {
        Dataset d = load_dataset("yuoh13");
        return closure(d.pool, 2, Exec::Parallel);
    }();
    return pool;
}

void bench_orthogonality(benchmark::State& state, Exec exec) {
    const auto& pool = grown_pool();
    for (auto _ : state) {
        auto g = build_orthogonality<Cyclotomic>(pool.vectors(), exec);
        benchmark::DoNotOptimize(g.adj.data());
    }
    state.counters["vectors"] = pool.size();
}

void bench_cliques(benchmark::State& state, Exec exec) {
    const auto& pool = grown_pool();
    static OrthoGraph g = build_orthogonality<Cyclotomic>(pool.vectors(), Exec::Parallel);
    for (auto _ : state) {
        auto cliques = enumerate_cliques(g, 3, exec);
        benchmark::DoNotOptimize(cliques.data());
    }
}

void bench_exhaustive(benchmark::State& state, Exec exec) {
    Dataset d = load_dataset("cabello18");
    static Scenario<Cyclotomic> sc = enumerate_contexts(d.pool);
    static OrthoGraph g = build_orthogonality<Cyclotomic>(sc.vertices);
    ColoringInstance inst{static_cast<int>(sc.vertices.size()), sc.contexts, &g};
    for (auto _ : state) {
        bool sat = exhaustive_colorable(inst, {}, exec);
        benchmark::DoNotOptimize(sat);
    }
}

void bench_closure(benchmark::State& state, Exec exec) {
    Dataset d = load_dataset("yuoh13");
    Pool<Cyclotomic> start(3);
    for (const auto& id : std::vector<std::string>{"y1m", "y2p", "y3m"})
        start.push(d.pool[*d.pool.find_id(id)]);
    for (auto _ : state) {
        auto pool = closure(start, 3, exec);
        benchmark::DoNotOptimize(pool.size());
    }
}

void bench_generating_subsets(benchmark::State& state, Exec exec) {
    Dataset d = load_dataset("lisonek21");
    static Scenario<Cyclotomic> sc = enumerate_contexts(d.pool);
    for (auto _ : state) {
        auto subs = find_generating_subsets(sc, 3, exec);
        benchmark::DoNotOptimize(subs.data());
    }
}

} // namespace

BENCHMARK_CAPTURE(bench_orthogonality, serial, Exec::Serial);
BENCHMARK_CAPTURE(bench_orthogonality, openmp, Exec::Parallel);
BENCHMARK_CAPTURE(bench_cliques, serial, Exec::Serial);
BENCHMARK_CAPTURE(bench_cliques, openmp, Exec::Parallel);
BENCHMARK_CAPTURE(bench_exhaustive, serial, Exec::Serial);
BENCHMARK_CAPTURE(bench_exhaustive, openmp, Exec::Parallel);
BENCHMARK_CAPTURE(bench_closure, serial, Exec::Serial);
BENCHMARK_CAPTURE(bench_closure, openmp, Exec::Parallel);
BENCHMARK_CAPTURE(bench_generating_subsets, serial, Exec::Serial);
BENCHMARK_CAPTURE(bench_generating_subsets, openmp, Exec::Parallel);

BENCHMARK_MAIN();
