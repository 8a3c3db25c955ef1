#include <benchmark/benchmark.h>

#include "flowcert/flowcert.hpp"

using namespace flowcert;

namespace {

struct Input {
    FlowGraph g;
    SpanningTree t;
};

Input make(std::size_t n, std::size_t m) {
    Input in{random_flowgraph(n, m, 42), {}};
    in.t = extract_spanning_tree(in.g, TreeStrategy::random, 42);
    return in;
}

void sizes(benchmark::internal::Benchmark* b) {
    for (std::int64_t n : {1000, 10000, 100000})
        for (std::int64_t k : {4, 10})
            b->Args({n, n * k});
}

void BM_Dominators(benchmark::State& state) {
    auto in = make(state.range(0), state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(dominator_tree(in.g));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_LowHigh(benchmark::State& state) {
    auto in = make(state.range(0), state.range(1));
    auto d = dominator_tree(in.g);
    for (auto _ : state)
        benchmark::DoNotOptimize(construct_low_high(in.g, d));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_ValidSet(benchmark::State& state) {
    auto in = make(state.range(0), state.range(1));
    auto d = dominator_tree(in.g);
    auto order = construct_low_high(in.g, d);
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_valid_set(in.g, in.t, d, order));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_DivergentTrees(benchmark::State& state) {
    auto in = make(state.range(0), state.range(1));
    auto d = dominator_tree(in.g);
    auto order = construct_low_high(in.g, d);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_divergent_trees(in.g, d, order));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_Pipeline(benchmark::State& state) {
    auto in = make(state.range(0), state.range(1));
    auto text = serialize(in.g);
    auto tree_text = serialize_tree(in.g, in.t);
    for (auto _ : state) {
        auto g = parse_flowgraph(text);
        auto t = parse_tree(tree_text, g);
        auto d = dominator_tree(g);
        auto order = construct_low_high(g, d);
        auto a = compute_valid_set(g, t, d, order);
        benchmark::DoNotOptimize(is_valid_set(g, t, a));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

} // namespace

BENCHMARK(BM_Dominators)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LowHigh)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidSet)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DivergentTrees)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pipeline)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
