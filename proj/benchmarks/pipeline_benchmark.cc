// Copyright 2026 The semtopic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "semtopic/cliques.h"
#include "semtopic/collective.h"
#include "semtopic/emit.h"
#include "semtopic/graph.h"
#include "semtopic/linked_post.h"

namespace semtopic {
namespace {

// Posts over a Zipf-like vocabulary, resembling a two-minute batch.
std::vector<LinkedPost> synthetic_posts(std::size_t n, std::size_t vocab, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> weights(vocab);
  for (std::size_t i = 0; i < vocab; ++i) weights[i] = 1.0 / static_cast<double>(i + 1);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::uniform_int_distribution<int> size(1, 6);
  std::vector<LinkedPost> posts(n);
  for (std::size_t i = 0; i < n; ++i) {
    posts[i].post_id = "p" + std::to_string(i);
    const int k = size(rng);
    for (int j = 0; j < k; ++j) {
      const std::string e = "http://dbpedia.org/resource/E" + std::to_string(pick(rng));
      const auto at = static_cast<std::size_t>(j) * 16;
      posts[i].links.push_back(Link{"e" + std::to_string(j), {at, at + 8}, e});
    }
  }
  return posts;
}

std::vector<std::vector<std::uint32_t>> gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (edge(rng)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  return adj;
}

void BM_MaximalCliques(benchmark::State& state) {
  const auto adj = gnp(static_cast<std::size_t>(state.range(0)), state.range(1) / 100.0, 1);
  std::size_t count = 0;
  for (auto _ : state) {
    auto cliques = maximal_cliques(adj);
    count = cliques.size();
    benchmark::DoNotOptimize(cliques);
  }
  state.counters["cliques"] = static_cast<double>(count);
}
BENCHMARK(BM_MaximalCliques)
    ->Args({20, 30})
    ->Args({100, 10})
    ->Args({100, 30})
    ->Args({500, 2})
    ->Args({60, 50});

void BM_BuildGraph(benchmark::State& state) {
  const auto posts = synthetic_posts(static_cast<std::size_t>(state.range(0)), 2000, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CoocGraph::build(posts, posts.size()));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildGraph)->Arg(1000)->Arg(6000)->Arg(20000);

void BM_PruneAndCliques(benchmark::State& state) {
  const auto posts = synthetic_posts(static_cast<std::size_t>(state.range(0)), 2000, 3);
  const CoocGraph g = CoocGraph::build(posts, posts.size());
  for (auto _ : state) {
    const CoocGraph pruned = prune_graph(g, 0.001);
    auto cliques = filter_small_cliques(enumerate_maximal_cliques(pruned), g, 0.01);
    benchmark::DoNotOptimize(merge_similar_cliques(std::move(cliques), g, 0.8, 0.0005));
  }
}
BENCHMARK(BM_PruneAndCliques)->Arg(6000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_Consolidate(benchmark::State& state) {
  const auto posts = synthetic_posts(static_cast<std::size_t>(state.range(0)), 2000, 4);
  for (auto _ : state) benchmark::DoNotOptimize(consolidate_links(posts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Consolidate)->Arg(6000);

void BM_SerializeTurtle(benchmark::State& state) {
  std::vector<Topic> topics(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < topics.size(); ++i) {
    topics[i].id = "http://example.org/semtopic/topic/20160927T010000Z/" + std::to_string(i + 1);
    for (int k = 0; k < 5; ++k) {
      topics[i].elements.push_back(
          {"http://dbpedia.org/resource/E" + std::to_string(i * 5 + k), ElementKind::kOther});
    }
    topics[i].maker = std::string(kDefaultMaker);
  }
  const TopicoVocab vocab;
  for (auto _ : state) benchmark::DoNotOptimize(serialize_turtle(topics, vocab));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SerializeTurtle)->Arg(100)->Arg(1000);

}  // namespace
}  // namespace semtopic

BENCHMARK_MAIN();
