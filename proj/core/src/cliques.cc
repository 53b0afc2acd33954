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
#include "semtopic/cliques.h"

#include <algorithm>
#include <iterator>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <fmt/format.h>

namespace semtopic {
namespace {

using VertexSet = std::vector<std::uint32_t>;  // sorted

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::size_t intersection_size(const VertexSet& a, const VertexSet& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// Matula-Beck ordering: repeatedly remove a vertex of minimum degree.
std::vector<std::uint32_t> degeneracy_order(
    const std::vector<std::vector<std::uint32_t>>& adj) {
  const std::size_t n = adj.size();
  std::size_t max_degree = 0;
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    max_degree = std::max(max_degree, degree[v]);
  }
  std::vector<std::vector<std::uint32_t>> buckets(max_degree + 1);
  for (std::uint32_t v = 0; v < n; ++v) buckets[degree[v]].push_back(v);
  std::vector<bool> removed(n, false);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  std::size_t d = 0;
  while (order.size() < n) {
    d = std::min(d, max_degree);
    while (buckets[d].empty()) ++d;
    std::uint32_t v = buckets[d].back();
    buckets[d].pop_back();
    // Stale bucket entries are skipped lazily.
    if (removed[v] || degree[v] != d) continue;
    removed[v] = true;
    order.push_back(v);
    for (std::uint32_t w : adj[v]) {
      if (removed[w]) continue;
      --degree[w];
      buckets[degree[w]].push_back(w);
      if (degree[w] < d) d = degree[w];
    }
  }
  return order;
}

class BronKerbosch {
 public:
  BronKerbosch(const std::vector<std::vector<std::uint32_t>>& adj,
               std::size_t min_size, const CliqueBudget& budget)
      : adj_(adj), min_size_(min_size), budget_(budget) {
    if (budget_.time_limit.count() > 0) {
      deadline_ = std::chrono::steady_clock::now() + budget_.time_limit;
    }
  }

  std::vector<VertexSet> run() {
    const auto order = degeneracy_order(adj_);
    std::vector<std::size_t> position(adj_.size());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    for (std::uint32_t v : order) {
      VertexSet later;
      VertexSet earlier;
      for (std::uint32_t w : adj_[v]) {
        (position[w] > position[v] ? later : earlier).push_back(w);
      }
      VertexSet clique{v};
      expand(clique, std::move(later), std::move(earlier));
    }
    for (auto& c : found_) std::sort(c.begin(), c.end());
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void expand(VertexSet& clique, VertexSet candidates, VertexSet excluded) {
    check_deadline();
    if (candidates.empty()) {
      if (excluded.empty() && clique.size() >= min_size_) found_.push_back(clique);
      return;
    }
    // Pivot on the vertex of candidates | excluded with most candidate
    // neighbours.
    std::uint32_t pivot = candidates.front();
    std::size_t best = 0;
    for (const VertexSet* pool : {&candidates, &excluded}) {
      for (std::uint32_t u : *pool) {
        std::size_t n = intersection_size(candidates, adj_[u]);
        if (n > best || (n == best && u < pivot && pool == &candidates)) {
          best = n;
          pivot = u;
        }
      }
    }
    VertexSet branch;
    std::set_difference(candidates.begin(), candidates.end(), adj_[pivot].begin(),
                        adj_[pivot].end(), std::back_inserter(branch));
    for (std::uint32_t v : branch) {
      clique.push_back(v);
      expand(clique, intersect(candidates, adj_[v]), intersect(excluded, adj_[v]));
      clique.pop_back();
      candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
      excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
  }

  void check_deadline() {
    if (!deadline_ || (++calls_ & 0x3ff) != 0) return;
    if (std::chrono::steady_clock::now() > *deadline_) {
      throw CliqueBudgetExceeded(fmt::format(
          "clique enumeration exceeded {} ms", budget_.time_limit.count()));
    }
  }

  const std::vector<std::vector<std::uint32_t>>& adj_;
  std::size_t min_size_;
  CliqueBudget budget_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::size_t calls_ = 0;
  std::vector<VertexSet> found_;
};

void sort_unique(std::vector<Clique>& cliques) {
  std::sort(cliques.begin(), cliques.end());
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
}

std::size_t string_intersection_size(const Clique& a, const Clique& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    int c = i->compare(*j);
    if (c < 0) {
      ++i;
    } else if (c > 0) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

Clique set_union(const Clique& a, const Clique& b) {
  Clique out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool cross_pairs_related(const Clique& a, const Clique& b, const CoocGraph& g,
                         double tau_e_min) {
  for (const std::string& x : a) {
    for (const std::string& y : b) {
      if (x == y) continue;
      if (!exceeds_fraction(g.pair_count(x, y), g.batch_size(), tau_e_min)) {
        return false;
      }
    }
  }
  return true;
}

TopicProvenance provenance_of(const Clique& topic, const CoocGraph& g) {
  TopicProvenance prov;
  std::unordered_map<std::uint32_t, std::size_t> hits;  // post -> topic elements
  std::vector<std::optional<CoocGraph::VertexId>> ids;
  for (const std::string& e : topic) {
    ids.push_back(g.find(e));
    if (ids.back()) {
      for (std::uint32_t p : g.posts_of(*ids.back())) ++hits[p];
    }
  }
  std::vector<std::uint32_t> shared;
  for (const auto& [p, n] : hits) {
    if (n >= 2) shared.push_back(p);
  }
  std::sort(shared.begin(), shared.end());
  for (std::uint32_t p : shared) prov.post_ids.push_back(g.post_ids()[p]);

  for (std::size_t i = 0; i < topic.size(); ++i) {
    ElementProvenance ep;
    if (ids[i]) {
      ep.post_count = g.post_count(*ids[i]);
      ep.freq = g.freq(*ids[i]);
      for (std::uint32_t p : g.posts_of(*ids[i])) {
        if (hits[p] >= 2) ep.post_ids.push_back(g.post_ids()[p]);
      }
    }
    prov.elements.emplace(topic[i], std::move(ep));
  }
  return prov;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> maximal_cliques(
    const std::vector<std::vector<std::uint32_t>>& adjacency, std::size_t min_size,
    const CliqueBudget& budget) {
  if (budget.max_vertices > 0 && adjacency.size() > budget.max_vertices) {
    throw CliqueBudgetExceeded(fmt::format("graph has {} vertices, budget is {}",
                                           adjacency.size(), budget.max_vertices));
  }
  return BronKerbosch(adjacency, min_size, budget).run();
}

std::vector<Clique> enumerate_maximal_cliques(const CoocGraph& g,
                                              const CliqueBudget& budget) {
  std::vector<Clique> out;
  for (const auto& ids : maximal_cliques(g.adjacency(), 2, budget)) {
    Clique c;
    c.reserve(ids.size());
    for (auto v : ids) c.push_back(g.name(v));
    out.push_back(std::move(c));
  }
  // Vertex ids follow IRI order, so the lists are already sorted by IRI.
  return out;
}

std::vector<Clique> filter_small_cliques(std::vector<Clique> cliques,
                                         const CoocGraph& g, double tau_kc) {
  std::erase_if(cliques, [&](const Clique& c) {
    if (c.size() != 2 && c.size() != 3) return false;
    return std::any_of(c.begin(), c.end(), [&](const std::string& e) {
      auto v = g.find(e);
      if (!v) throw std::invalid_argument(fmt::format("no frequency for {}", e));
      return below_fraction(g.post_count(*v), g.batch_size(), tau_kc);
    });
  });
  return cliques;
}

double jaccard_similarity(const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
  const std::size_t inter = string_intersection_size(a, b);
  const std::size_t uni = a.size() + b.size() - inter;
  if (uni == 0) return 1.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

TopicSet merge_similar_cliques(std::vector<Clique> cliques, const CoocGraph& unpruned,
                               double tau_c, double tau_e_min) {
  sort_unique(cliques);
  while (true) {
    std::unordered_map<std::string, std::vector<std::size_t>> holders;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      for (const std::string& e : cliques[i]) holders[e].push_back(i);
    }
    struct Candidate {
      std::size_t i, j, inter, uni;
      Clique merged;
    };
    std::optional<Candidate> best;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [element, list] : holders) {
      for (std::size_t a = 0; a < list.size(); ++a) {
        for (std::size_t b = a + 1; b < list.size(); ++b) {
          const std::size_t i = list[a];
          const std::size_t j = list[b];
          if (!seen.emplace(i, j).second) continue;
          const std::size_t inter = string_intersection_size(cliques[i], cliques[j]);
          const std::size_t uni = cliques[i].size() + cliques[j].size() - inter;
          if (!exceeds_fraction(inter, uni, tau_c)) continue;
          if (!cross_pairs_related(cliques[i], cliques[j], unpruned, tau_e_min)) {
            continue;
          }
          Clique merged = set_union(cliques[i], cliques[j]);
          bool better = !best;
          if (best) {
            const auto lhs = inter * best->uni;
            const auto rhs = best->inter * uni;
            better = lhs > rhs || (lhs == rhs && merged < best->merged);
          }
          if (better) best = Candidate{i, j, inter, uni, std::move(merged)};
        }
      }
    }
    if (!best) break;
    cliques.erase(cliques.begin() + static_cast<long>(best->j));
    cliques.erase(cliques.begin() + static_cast<long>(best->i));
    cliques.push_back(std::move(best->merged));
    sort_unique(cliques);
  }

  TopicSet result;
  result.topics = std::move(cliques);
  for (const Clique& topic : result.topics) {
    result.provenance.push_back(provenance_of(topic, unpruned));
  }
  return result;
}

}  // namespace semtopic
