// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#include <benchmark/benchmark.h>

#include "stratagem/bradford.hpp"
#include "stratagem/centrality.hpp"
#include "stratagem/engine.hpp"
#include "stratagem/recommender.hpp"
#include "stratagem/snapshot.hpp"

namespace {

using namespace stratagem;

const Snapshot& shared_snapshot(std::size_t n_docs)
{
    static std::map<std::size_t, std::shared_ptr<const Snapshot>> cache;
    auto& slot = cache[n_docs];
    if (!slot) slot = Snapshot::build(generate_synthetic({n_docs, 20, 1.5, 42}));
    return *slot;
}

void bm_train(benchmark::State& state)
{
    const auto corpus = generate_synthetic({std::size_t(state.range(0)), 20, 1.5, 42});
    const Tokenizer tok;
    for (auto _ : state) benchmark::DoNotOptimize(train(corpus, tok));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_train)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void bm_search(benchmark::State& state)
{
    const auto& snap = shared_snapshot(std::size_t(state.range(0)));
    SearchRequest req;
    req.q = "media war coverage";
    req.rerank = static_cast<Rerank>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(run_search(snap, req));
}
BENCHMARK(bm_search)
    ->ArgsProduct({{1000, 10000}, {0, 1, 2}})
    ->ArgNames({"docs", "rerank"})
    ->Unit(benchmark::kMicrosecond);

void bm_bradfordize(benchmark::State& state)
{
    const auto& snap = shared_snapshot(10000);
    const auto base = snap.index.search("media war coverage school health", kRerankDepth);
    for (auto _ : state) benchmark::DoNotOptimize(bradfordize(base, snap.index));
    state.SetItemsProcessed(state.iterations() * std::int64_t(base.hits.size()));
}
BENCHMARK(bm_bradfordize)->Unit(benchmark::kMicrosecond);

void bm_brandes(benchmark::State& state)
{
    const auto& snap = shared_snapshot(10000);
    const auto base = snap.index.search("media war coverage school health", kRerankDepth);
    const auto graph = build_graph(base, snap.corpus);
    for (auto _ : state) benchmark::DoNotOptimize(brandes_betweenness(graph));
    state.counters["nodes"] = double(graph.betweenness().size());
}
BENCHMARK(bm_brandes)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
