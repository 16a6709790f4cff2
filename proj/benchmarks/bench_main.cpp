#include <benchmark/benchmark.h>

#include "ogsat/classify.hpp"
#include "ogsat/embed.hpp"
#include "ogsat/families.hpp"
#include "ogsat/saturate.hpp"
#include "ogsat/search.hpp"

using namespace ogsat;

namespace {

void BM_contains_linear_host(benchmark::State& state) {
    const auto g = linked_matching(LinkedMatchingSpec({1, 0, 1}));
    const auto host = linear_host(g, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(contains_ordered(host, g));
}
BENCHMARK(BM_contains_linear_host)->Arg(20)->Arg(40)->Arg(80);

void BM_contains_cyclic(benchmark::State& state) {
    const auto x = enclosed_matching(static_cast<int>(state.range(0)));
    const auto host = cyclic_linear_host(x, x.n + 12);
    for (auto _ : state) benchmark::DoNotOptimize(contains_cyclic(host, x));
}
BENCHMARK(BM_contains_cyclic)->Arg(1)->Arg(2)->Arg(3);

void BM_is_saturating_blowup(benchmark::State& state) {
    const auto g = linked_matching(LinkedMatchingSpec({0, 1, 0}));
    const OrderedGraph witness(11, {{1, 3}, {2, 4}, {2, 7}, {3, 9}, {4, 5}, {5, 10}, {7, 8},
                                    {8, 10}, {9, 11}});
    const auto cert = is_witness(witness, g, true);
    const auto host = greedy_saturate(blowup(*cert, static_cast<int>(state.range(0))), g);
    for (auto _ : state) benchmark::DoNotOptimize(is_saturating(host, g).ok);
}
BENCHMARK(BM_is_saturating_blowup)->Arg(30)->Arg(60);

void BM_exact_sat_k3(benchmark::State& state) {
    const auto k3 = complete_graph(3);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exact_sat(k3, n).k);
}
BENCHMARK(BM_exact_sat_k3)->Arg(5)->Arg(6);

void BM_greedy_saturate(benchmark::State& state) {
    const auto g = crossing_chain(2);
    const OrderedGraph empty(static_cast<int>(state.range(0)), {});
    for (auto _ : state) benchmark::DoNotOptimize(greedy_saturate(empty, g).edges.size());
}
BENCHMARK(BM_greedy_saturate)->Arg(10)->Arg(20);

void BM_verdict_ordered(benchmark::State& state) {
    const auto g = linked_matching(LinkedMatchingSpec({0, 0, 1, 0, 0, 1, 0, 0}));
    for (auto _ : state) benchmark::DoNotOptimize(verdict_ordered(g).status);
}
BENCHMARK(BM_verdict_ordered);

}  // namespace

BENCHMARK_MAIN();
