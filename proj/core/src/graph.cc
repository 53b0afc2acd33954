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
#include "semtopic/graph.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace semtopic {
namespace {

// Relative tolerance under which count/n and tau count as equal.
constexpr double kTieTolerance = 1e-9;

bool near(double a, double b) {
  return std::fabs(a - b) <= kTieTolerance * std::max(1.0, std::fabs(b));
}

}  // namespace

bool exceeds_fraction(std::size_t count, std::size_t n, double tau) {
  if (n == 0) return false;
  const double bound = tau * static_cast<double>(n);
  const auto c = static_cast<double>(count);
  return !near(c, bound) && c > bound;
}

bool below_fraction(std::size_t count, std::size_t n, double tau) {
  if (n == 0) return false;
  const double bound = tau * static_cast<double>(n);
  const auto c = static_cast<double>(count);
  return !near(c, bound) && c < bound;
}

std::uint64_t CoocGraph::key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

void CoocGraph::index_vertices() {
  index_.clear();
  index_.reserve(vertices_.size());
  for (VertexId i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
}

void CoocGraph::finish_edges() {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  edge_index_.clear();
  edge_index_.reserve(edges_.size());
  adjacency_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    edge_index_.emplace(key(edges_[i].u, edges_[i].v), i);
    adjacency_[edges_[i].u].push_back(edges_[i].v);
    adjacency_[edges_[i].v].push_back(edges_[i].u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

CoocGraph CoocGraph::build(const std::vector<LinkedPost>& posts,
                           std::size_t batch_size) {
  CoocGraph g;
  g.batch_size_ = batch_size;
  if (batch_size == 0) return g;
  if (posts.size() > batch_size) {
    throw std::invalid_argument("more posts than the batch size");
  }

  std::vector<std::vector<std::string>> elements;
  elements.reserve(posts.size());
  for (const LinkedPost& post : posts) {
    elements.push_back(post.elements());
    g.vertices_.insert(g.vertices_.end(), elements.back().begin(),
                       elements.back().end());
    g.post_ids_.push_back(post.post_id);
  }
  std::sort(g.vertices_.begin(), g.vertices_.end());
  g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()),
                    g.vertices_.end());
  g.index_vertices();
  g.vertex_counts_.assign(g.vertices_.size(), 0);
  g.vertex_posts_.assign(g.vertices_.size(), {});

  std::unordered_map<std::uint64_t, std::size_t> pair_counts;
  std::vector<VertexId> ids;
  for (std::uint32_t p = 0; p < elements.size(); ++p) {
    ids.clear();
    for (const std::string& e : elements[p]) ids.push_back(g.index_.at(e));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      ++g.vertex_counts_[ids[i]];
      g.vertex_posts_[ids[i]].push_back(p);
      for (std::size_t j = i + 1; j < ids.size(); ++j) ++pair_counts[key(ids[i], ids[j])];
    }
  }
  g.edges_.reserve(pair_counts.size());
  for (const auto& [k, count] : pair_counts) {
    g.edges_.push_back(Edge{static_cast<VertexId>(k >> 32),
                            static_cast<VertexId>(k & 0xffffffffu), count});
  }
  g.finish_edges();
  return g;
}

CoocGraph CoocGraph::from_counts(
    std::size_t batch_size, const std::map<std::string, std::size_t>& vertex_counts,
    const std::map<std::pair<std::string, std::string>, std::size_t>& edge_counts) {
  CoocGraph g;
  g.batch_size_ = batch_size;
  for (const auto& [iri, count] : vertex_counts) {
    if (count > batch_size) throw std::invalid_argument("vertex count above batch size");
    g.vertices_.push_back(iri);
    g.vertex_counts_.push_back(count);
  }
  g.index_vertices();
  g.vertex_posts_.assign(g.vertices_.size(), {});
  std::map<std::uint64_t, std::size_t> seen;
  for (const auto& [pair, count] : edge_counts) {
    auto u = g.find(pair.first);
    auto v = g.find(pair.second);
    if (!u || !v) throw std::invalid_argument("edge endpoint missing from vertices");
    if (*u == *v) throw std::invalid_argument("self-loop");
    if (count == 0) continue;
    if (count > std::min(g.vertex_counts_[*u], g.vertex_counts_[*v])) {
      throw std::invalid_argument("edge count above an endpoint count");
    }
    if (!seen.emplace(key(*u, *v), count).second) {
      throw std::invalid_argument("edge listed twice");
    }
    g.edges_.push_back(Edge{std::min(*u, *v), std::max(*u, *v), count});
  }
  g.finish_edges();
  return g;
}

std::optional<CoocGraph::VertexId> CoocGraph::find(std::string_view iri) const {
  auto it = index_.find(std::string(iri));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double CoocGraph::freq(VertexId v) const {
  return batch_size_ == 0 ? 0.0
                          : static_cast<double>(vertex_counts_[v]) /
                                static_cast<double>(batch_size_);
}

std::size_t CoocGraph::pair_count(VertexId u, VertexId v) const {
  if (u == v) return 0;
  auto it = edge_index_.find(key(u, v));
  return it == edge_index_.end() ? 0 : edges_[it->second].count;
}

std::size_t CoocGraph::pair_count(std::string_view a, std::string_view b) const {
  auto u = find(a);
  auto v = find(b);
  if (!u || !v) return 0;
  return pair_count(*u, *v);
}

double CoocGraph::weight(VertexId u, VertexId v) const {
  return batch_size_ == 0 ? 0.0
                          : static_cast<double>(pair_count(u, v)) /
                                static_cast<double>(batch_size_);
}

double CoocGraph::weight(std::string_view a, std::string_view b) const {
  return batch_size_ == 0 ? 0.0
                          : static_cast<double>(pair_count(a, b)) /
                                static_cast<double>(batch_size_);
}

CoocGraph prune_graph(const CoocGraph& g, double tau_e) {
  using VertexId = CoocGraph::VertexId;
  std::vector<CoocGraph::Edge> kept;
  std::vector<bool> alive(g.vertex_count(), false);
  for (const auto& e : g.edges()) {
    if (exceeds_fraction(e.count, g.batch_size(), tau_e)) {
      kept.push_back(e);
      alive[e.u] = alive[e.v] = true;
    }
  }
  CoocGraph out;
  out.batch_size_ = g.batch_size_;
  out.post_ids_ = g.post_ids_;
  std::vector<VertexId> remap(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!alive[v]) continue;
    remap[v] = static_cast<VertexId>(out.vertices_.size());
    out.vertices_.push_back(g.vertices_[v]);
    out.vertex_counts_.push_back(g.vertex_counts_[v]);
    out.vertex_posts_.push_back(g.vertex_posts_[v]);
  }
  out.index_vertices();
  for (auto e : kept) {
    e.u = remap[e.u];
    e.v = remap[e.v];
    out.edges_.push_back(e);
  }
  out.finish_edges();
  return out;
}

void write_edge_list(std::ostream& out, const CoocGraph& g) {
  for (const auto& e : g.edges()) {
    out << fmt::format("{}\t{}\t{}\t{}\n", g.name(e.u), g.name(e.v), e.count,
                       g.weight(e.u, e.v));
  }
}

}  // namespace semtopic
