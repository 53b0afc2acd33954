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
#ifndef SEMTOPIC_CLIQUES_H_
#define SEMTOPIC_CLIQUES_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "semtopic/errors.h"
#include "semtopic/graph.h"

namespace semtopic {

// Element IRIs, sorted and distinct.
using Clique = std::vector<std::string>;

// Bounds on clique enumeration. Zero means unbounded.
struct CliqueBudget {
  std::size_t max_vertices = 0;
  std::chrono::milliseconds time_limit{0};
};

class CliqueBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// All maximal cliques with at least min_size vertices of an undirected graph
// given as sorted adjacency lists. Bron-Kerbosch with pivoting over a
// degeneracy ordering. Each clique is sorted; the list is sorted
// lexicographically.
std::vector<std::vector<std::uint32_t>> maximal_cliques(
    const std::vector<std::vector<std::uint32_t>>& adjacency,
    std::size_t min_size = 2, const CliqueBudget& budget = {});

std::vector<Clique> enumerate_maximal_cliques(const CoocGraph& g,
                                              const CliqueBudget& budget = {});

// Drops 2- and 3-cliques containing an element whose frequency in the batch
// is below tau_kc. Larger cliques pass.
std::vector<Clique> filter_small_cliques(std::vector<Clique> cliques,
                                         const CoocGraph& g, double tau_kc);

// |a & b| / |a | b| over sorted sets.
double jaccard_similarity(const std::vector<std::string>& a,
                          const std::vector<std::string>& b);

struct ElementProvenance {
  std::size_t post_count = 0;  // posts of the batch containing the element
  double freq = 0.0;
  // Posts where the element co-occurs with another element of the topic.
  std::vector<std::string> post_ids;
};

struct TopicProvenance {
  // Posts containing at least two elements of the topic.
  std::vector<std::string> post_ids;
  std::map<std::string, ElementProvenance> elements;
};

struct TopicSet {
  std::vector<Clique> topics;
  std::vector<TopicProvenance> provenance;  // parallel to topics
};

// Greedy fixpoint of the clique merge rule: while some pair has Jaccard
// similarity above tau_c and every cross pair of distinct vertices has
// weight above tau_e_min in the unpruned graph, the qualifying pair with the
// highest similarity (ties: smallest union) is replaced by its union.
// Provenance is filled from the graph's post lists when available.
TopicSet merge_similar_cliques(std::vector<Clique> cliques,
                               const CoocGraph& unpruned, double tau_c,
                               double tau_e_min);

}  // namespace semtopic

#endif  // SEMTOPIC_CLIQUES_H_
