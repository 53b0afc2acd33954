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
#ifndef SEMTOPIC_GRAPH_H_
#define SEMTOPIC_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semtopic/linked_post.h"

namespace semtopic {

// count/n > tau, with near-equality treated as equality so that a decimal
// threshold such as 0.001 and a count such as 6 of 6000 compare as equal.
bool exceeds_fraction(std::size_t count, std::size_t n, double tau);
// count/n < tau, with the same treatment of near-equality.
bool below_fraction(std::size_t count, std::size_t n, double tau);

// Weighted element co-occurrence graph of one batch. Weights and
// frequencies are kept as post counts and exposed as fractions of
// batch_size. Vertices are sorted by IRI; vertex ids index that order.
class CoocGraph {
 public:
  using VertexId = std::uint32_t;

  struct Edge {
    VertexId u;  // u < v
    VertexId v;
    std::size_t count;
  };

  CoocGraph() = default;

  // One vertex per distinct element, one edge per element pair sharing a
  // post. Each post counts once per vertex and once per pair.
  static CoocGraph build(const std::vector<LinkedPost>& posts,
                         std::size_t batch_size);

  // Direct construction from counts, for fixtures and tools. Edge endpoints
  // must be listed in vertex_counts.
  static CoocGraph from_counts(
      std::size_t batch_size,
      const std::map<std::string, std::size_t>& vertex_counts,
      const std::map<std::pair<std::string, std::string>, std::size_t>&
          edge_counts);

  std::size_t batch_size() const { return batch_size_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& name(VertexId v) const { return vertices_[v]; }
  std::optional<VertexId> find(std::string_view iri) const;

  std::size_t post_count(VertexId v) const { return vertex_counts_[v]; }
  double freq(VertexId v) const;

  // Co-occurrence count of u and v; 0 when they never share a post.
  std::size_t pair_count(VertexId u, VertexId v) const;
  std::size_t pair_count(std::string_view a, std::string_view b) const;
  double weight(VertexId u, VertexId v) const;
  double weight(std::string_view a, std::string_view b) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const {
    return adjacency_[v];
  }
  const std::vector<std::vector<VertexId>>& adjacency() const {
    return adjacency_;
  }

  // Post ids of the batch (in batch order) and, per vertex, the indices of
  // the posts containing it. Empty for graphs built from counts.
  const std::vector<std::string>& post_ids() const { return post_ids_; }
  const std::vector<std::uint32_t>& posts_of(VertexId v) const {
    return vertex_posts_[v];
  }

 private:
  friend CoocGraph prune_graph(const CoocGraph& g, double tau_e);

  static std::uint64_t key(VertexId u, VertexId v);
  void index_vertices();
  void finish_edges();

  std::size_t batch_size_ = 0;
  std::vector<std::string> vertices_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::size_t> vertex_counts_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::string> post_ids_;
  std::vector<std::vector<std::uint32_t>> vertex_posts_;
};

// Keeps the edges with weight strictly above tau_e and the vertices still
// incident to one of them.
CoocGraph prune_graph(const CoocGraph& g, double tau_e);

// "iri_a<TAB>iri_b<TAB>count<TAB>weight" per edge, in vertex order.
void write_edge_list(std::ostream& out, const CoocGraph& g);

}  // namespace semtopic

#endif  // SEMTOPIC_GRAPH_H_
