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
#ifndef SEMTOPIC_TESTS_SUPPORT_FIXTURES_H_
#define SEMTOPIC_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "semtopic/analyze.h"
#include "semtopic/cliques.h"
#include "semtopic/corpus.h"
#include "semtopic/emit.h"
#include "semtopic/graph.h"
#include "semtopic/linked_post.h"

namespace semtopic::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

Timestamp at(const std::string& rfc3339);

// A post whose links are the given elements; each spot is the IRI itself.
LinkedPost post_with(const std::string& id, const std::vector<std::string>& elements);

// Writes posts as JSON lines.
void write_corpus(const std::filesystem::path& path, const Corpus& posts);

// A seven-element co-occurrence graph over 1000 posts: E0-E1-E2 and
// E0-E3-E4-E5 fully connected, E0-E6, and E1-E3 co-occurring in a single
// post (weight 0.001, not above tau_e). e6_posts sets the post count of E6.
CoocGraph seven_vertex_graph(std::size_t e6_posts = 50);

// Exhaustive oracle: every vertex subset is tested for completeness and
// maximality. n must not exceed 24.
std::set<std::vector<std::uint32_t>> brute_force_maximal_cliques(
    const std::vector<std::vector<std::uint32_t>>& adjacency);

// G(n, p) as sorted adjacency lists.
std::vector<std::vector<std::uint32_t>> random_graph(std::mt19937_64& rng, std::size_t n,
                                                     double p);

// Random topics over small person/element pools spread across a few
// intervals, for the analysis oracles.
std::vector<Topic> random_topics(std::mt19937_64& rng, std::size_t count);

std::vector<PersonCount> brute_force_co_persons(const std::vector<Topic>& topics,
                                                const std::string& anchor);
std::vector<Interval> brute_force_intervals(const std::vector<Topic>& topics,
                                            const std::set<std::string>& targets);

// A synthetic corpus with a dictionary linker. Planted posts mention the
// entities Alpha, Bravo, Charlie and Delta together; the others mention two
// noise entities, each noise pair in at most max_pair_posts posts. Posts are
// spread evenly over minutes starting at 2016-09-27T01:00:00Z.
struct SyntheticWorld {
  std::filesystem::path corpus;
  std::filesystem::path dictionary;
  std::filesystem::path types;
  std::filesystem::path config;
  std::vector<std::string> planted;  // entity IRIs, sorted
};

SyntheticWorld write_planted_world(const std::filesystem::path& dir, std::size_t posts,
                                   double planted_fraction, int minutes, std::uint64_t seed,
                                   std::size_t max_pair_posts = 1);

}  // namespace semtopic::testing

#endif  // SEMTOPIC_TESTS_SUPPORT_FIXTURES_H_
