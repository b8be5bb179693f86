#include <benchmark/benchmark.h>

#include <random>

#include "qforest/characterize.hpp"
#include "qforest/graphs.hpp"
#include "qforest/oracle.hpp"
#include "qforest/recognize.hpp"

namespace {

qforest::Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return qforest::Graph::from_edges(n, edges);
}

void BM_f_vector_simplex(benchmark::State& state) {
    std::vector<qforest::Vertex> verts(static_cast<std::size_t>(state.range(0)));
    for (int i = 0; i < state.range(0); ++i) verts[static_cast<std::size_t>(i)] = i + 1;
    const qforest::SimplicialComplex c = qforest::from_facets({qforest::Face(verts)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(qforest::f_vector(c));
    }
}
BENCHMARK(BM_f_vector_simplex)->Arg(12)->Arg(16)->Arg(20);

void BM_realize_roundtrip(benchmark::State& state) {
    const qforest::SimplicialComplex seed =
        qforest::construct_forest({{2, 3, 4, 4, 4}, {1, 1, 1, 1}});
    const qforest::FVector f = qforest::f_vector(seed);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qforest::realize(f));
    }
}
BENCHMARK(BM_realize_roundtrip);

void BM_is_chordal(benchmark::State& state) {
    const qforest::Graph g =
        random_graph(static_cast<int>(state.range(0)), 0.3, 20250809);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qforest::is_chordal(g));
    }
}
BENCHMARK(BM_is_chordal)->Arg(20)->Arg(60);

void BM_clique_complex_dense(benchmark::State& state) {
    const qforest::Graph g = random_graph(18, 0.7, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qforest::clique_complex(g));
    }
}
BENCHMARK(BM_clique_complex_dense);

void BM_leaf_order(benchmark::State& state) {
    const qforest::SimplicialComplex c = qforest::construct_forest(
        {{3, 3, 3, 4, 4, 5, 5, 6}, {1, 1, 1, 2, 2, 2, 2}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(qforest::leaf_order(c));
    }
}
BENCHMARK(BM_leaf_order);

void BM_enumerate_quasi_forests(benchmark::State& state) {
    const qforest::EnumerationScope scope{static_cast<int>(state.range(0)), 4,
                                          std::nullopt};
    for (auto _ : state) {
        long long count = 0;
        qforest::enumerate_quasi_forests(scope, [&](const qforest::SimplicialComplex&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_enumerate_quasi_forests)->Arg(4)->Arg(5);

} // namespace

BENCHMARK_MAIN();
