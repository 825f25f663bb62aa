#include <benchmark/benchmark.h>

#include "sqconn/connectivity.hpp"
#include "sqconn/families.hpp"
#include "sqconn/formats.hpp"
#include "sqconn/graph.hpp"
#include "sqconn/oracle.hpp"
#include "sqconn/power.hpp"

using namespace sqconn;

static void BM_Square(benchmark::State& state) {
    const Graph g = gen_glambda(static_cast<int>(state.range(0))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(square(g));
    state.SetItemsProcessed(state.iterations() * g.order());
}
BENCHMARK(BM_Square)->Arg(4)->Arg(9)->Arg(16);

static void BM_EdgeConnectivitySquare(benchmark::State& state) {
    const Graph h = square(gen_glambda(static_cast<int>(state.range(0))).graph);
    for (auto _ : state) benchmark::DoNotOptimize(edge_connectivity(h).value);
}
BENCHMARK(BM_EdgeConnectivitySquare)->Arg(4)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_EdgeConnectivityStoerWagner(benchmark::State& state) {
    const Graph h = square(gen_glambda(static_cast<int>(state.range(0))).graph);
    for (auto _ : state) benchmark::DoNotOptimize(edge_connectivity_stoer_wagner(h));
}
BENCHMARK(BM_EdgeConnectivityStoerWagner)->Arg(4)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_VertexConnectivity(benchmark::State& state) {
    const Graph g = gen_gkappa_even(static_cast<int>(state.range(0))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g).value);
}
BENCHMARK(BM_VertexConnectivity)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_EnumerateConnected(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = enumerate_connected_graphs(n, [](const Graph&) {});
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateConnected)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Graph6RoundTrip(benchmark::State& state) {
    const Graph g = gen_gkappa_even(4).graph;
    for (auto _ : state) benchmark::DoNotOptimize(decode_graph6(encode_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip);

BENCHMARK_MAIN();
