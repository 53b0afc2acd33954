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
#include "fixtures.h"

#include <algorithm>
#include <cctype>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace semtopic::testing {

TempDir::TempDir() {
  static std::mt19937_64 rng{std::random_device{}()};
  const auto base = std::filesystem::temp_directory_path();
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto candidate = base / ("semtopic-test-" + std::to_string(rng()));
    if (std::filesystem::create_directory(candidate)) {
      path_ = candidate;
      return;
    }
  }
  throw std::runtime_error("cannot create temp dir");
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

Timestamp at(const std::string& rfc3339) { return parse_rfc3339(rfc3339); }

LinkedPost post_with(const std::string& id, const std::vector<std::string>& elements) {
  LinkedPost post;
  post.post_id = id;
  std::size_t offset = 0;
  for (const std::string& e : elements) {
    post.text += e + " ";
    post.links.push_back(Link{e, Span{offset, offset + e.size()}, e, LinkOrigin::kLinker});
    offset += e.size() + 1;
  }
  return post;
}

void write_corpus(const std::filesystem::path& path, const Corpus& posts) {
  std::ostringstream out;
  for (const Post& p : posts) {
    nlohmann::json j{{"id", p.id}, {"text", p.text}, {"created_at", format_rfc3339(p.created_at)}};
    if (p.author) j["author"] = *p.author;
    out << j.dump() << '\n';
  }
  write_file(path, out.str());
}

CoocGraph seven_vertex_graph(std::size_t e6_posts) {
  std::map<std::string, std::size_t> vertices{
      {"E0", 120}, {"E1", 60}, {"E2", 40}, {"E3", 70},
      {"E4", 50},  {"E5", 45}, {"E6", e6_posts}};
  std::map<std::pair<std::string, std::string>, std::size_t> edges{
      {{"E0", "E1"}, 20}, {{"E0", "E2"}, 15}, {{"E1", "E2"}, 12},
      {{"E0", "E3"}, 25}, {{"E0", "E4"}, 18}, {{"E0", "E5"}, 16},
      {{"E3", "E4"}, 14}, {{"E3", "E5"}, 13}, {{"E4", "E5"}, 11},
      {{"E0", "E6"}, std::min<std::size_t>(e6_posts, 3)},
      {{"E1", "E3"}, 1}};
  return CoocGraph::from_counts(1000, vertices, edges);
}

std::set<std::vector<std::uint32_t>> brute_force_maximal_cliques(
    const std::vector<std::vector<std::uint32_t>>& adjacency) {
  const std::size_t n = adjacency.size();
  if (n > 24) throw std::invalid_argument("oracle limited to 24 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto u : adjacency[v]) adj[v] |= 1u << u;
  }
  auto complete = [&](std::uint32_t mask) {
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v & 1u) && ((adj[v] | 1u << v) & mask) != mask) return false;
    }
    return true;
  };
  std::set<std::vector<std::uint32_t>> out;
  const std::uint32_t limit = n == 0 ? 1u : (1u << n);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    if (std::popcount(mask) < 2 || !complete(mask)) continue;
    bool maximal = true;
    for (std::size_t u = 0; u < n && maximal; ++u) {
      if (!(mask >> u & 1u) && complete(mask | 1u << u)) maximal = false;
    }
    if (!maximal) continue;
    std::vector<std::uint32_t> clique;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (mask >> v & 1u) clique.push_back(v);
    }
    out.insert(std::move(clique));
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> random_graph(std::mt19937_64& rng, std::size_t n,
                                                     double p) {
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
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<Topic> random_topics(std::mt19937_64& rng, std::size_t count) {
  const std::string dbr = "http://dbpedia.org/resource/";
  const std::vector<std::string> persons{"P_Alice", "P_Bob", "P_Carol", "P_Dave", "P_Erin"};
  const std::vector<std::string> others{"X_Tax", "X_Wall", "X_Jobs", "X_Health", "X_Trade",
                                        "X_Debt"};
  const std::vector<std::string> places{"L_Ohio", "L_Texas"};
  std::uniform_int_distribution<int> interval_pick(0, 5);
  std::bernoulli_distribution coin(0.4);
  const Timestamp origin = at("2016-10-09T01:00:00Z");
  std::vector<Topic> topics;
  std::map<int, int> ordinal;
  for (std::size_t i = 0; i < count; ++i) {
    Topic t;
    const int slot = interval_pick(rng);
    t.interval_start = origin + std::chrono::minutes(2 * slot) + std::chrono::seconds(slot);
    t.interval_end = origin + std::chrono::minutes(2 * slot + 2) - std::chrono::seconds(1);
    t.created_at = origin;
    t.maker = std::string(kDefaultMaker);
    t.id = std::string(kDefaultTopicBase) + "/topic/" + format_compact(t.interval_start) + "/" +
           std::to_string(++ordinal[slot]);
    auto add = [&](const std::vector<std::string>& pool, ElementKind kind) {
      for (const std::string& name : pool) {
        if (coin(rng)) t.elements.push_back(TopicElement{dbr + name, kind});
      }
    };
    add(persons, ElementKind::kPerson);
    add(others, ElementKind::kOther);
    add(places, ElementKind::kLocation);
    // Person IRIs also appear under another kind now and then, which the
    // person-only analyses must ignore.
    if (coin(rng) && coin(rng)) t.elements.push_back(TopicElement{dbr + "P_Bob", ElementKind::kOther});
    std::sort(t.elements.begin(), t.elements.end(),
              [](const TopicElement& a, const TopicElement& b) { return a.iri < b.iri; });
    t.elements.erase(std::unique(t.elements.begin(), t.elements.end(),
                                 [](const TopicElement& a, const TopicElement& b) {
                                   return a.iri == b.iri;
                                 }),
                     t.elements.end());
    while (t.elements.size() < 2) {
      t.elements.push_back(TopicElement{dbr + "Z_Filler" + std::to_string(t.elements.size()),
                                        ElementKind::kOther});
    }
    topics.push_back(std::move(t));
  }
  return topics;
}

std::vector<PersonCount> brute_force_co_persons(const std::vector<Topic>& topics,
                                                const std::string& anchor) {
  std::map<std::string, std::size_t> counts;
  for (const Topic& t : topics) {
    bool anchored = false;
    for (const auto& e : t.elements) {
      anchored = anchored || (e.iri == anchor && e.kind == ElementKind::kPerson);
    }
    if (!anchored) continue;
    for (const auto& e : t.elements) {
      if (e.kind == ElementKind::kPerson && e.iri != anchor) ++counts[e.iri];
    }
  }
  std::vector<PersonCount> out;
  for (const auto& [p, n] : counts) out.push_back({p, n});
  std::sort(out.begin(), out.end(), [](const PersonCount& a, const PersonCount& b) {
    return a.topics != b.topics ? a.topics > b.topics : a.person < b.person;
  });
  return out;
}

std::vector<Interval> brute_force_intervals(const std::vector<Topic>& topics,
                                            const std::set<std::string>& targets) {
  std::vector<Interval> out;
  for (const Topic& t : topics) {
    for (const auto& e : t.elements) {
      if (targets.count(e.iri)) {
        out.push_back({t.interval_start, t.interval_end});
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SyntheticWorld write_planted_world(const std::filesystem::path& dir, std::size_t posts,
                                   double planted_fraction, int minutes, std::uint64_t seed,
                                   std::size_t max_pair_posts) {
  std::filesystem::create_directories(dir);
  const std::string base = "http://example.org/entity/";
  const std::vector<std::string> planted_words{"alpha", "bravo", "charlie", "delta"};
  constexpr std::size_t kNoise = 120;

  SyntheticWorld world;
  world.corpus = dir / "posts.jsonl";
  world.dictionary = dir / "dictionary.json";
  world.types = dir / "types.json";
  world.config = dir / "run.conf";

  nlohmann::json dict = nlohmann::json::array();
  nlohmann::json types = nlohmann::json::object();
  for (const std::string& w : planted_words) {
    std::string iri = base + static_cast<char>(std::toupper(w[0])) + w.substr(1);
    dict.push_back({{"spots", {w}}, {"iri", iri}, {"rho", 0.5}, {"p", 0.8}});
    types[iri] = nlohmann::json::array();
    world.planted.push_back(iri);
  }
  for (std::size_t i = 0; i < kNoise; ++i) {
    std::string word = "noise" + std::to_string(i) + "x";
    dict.push_back(
        {{"spots", {word}}, {"iri", base + "Noise_" + std::to_string(i)}, {"rho", 0.5}, {"p", 0.8}});
  }
  std::sort(world.planted.begin(), world.planted.end());
  write_file(world.dictionary, dict.dump(2));
  write_file(world.types, types.dump(2));
  write_file(world.config, "linker = dictionary\ndictionary = dictionary.json\n"
                           "type_db = types.json\ninterval_minutes = 2\n");

  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < kNoise; ++a) {
    for (std::size_t b = a + 1; b < kNoise; ++b) pairs.emplace_back(a, b);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);

  const auto planted_count = static_cast<std::size_t>(planted_fraction * posts + 0.5);
  std::vector<bool> is_planted(posts, false);
  std::fill(is_planted.begin(), is_planted.begin() + planted_count, true);
  std::shuffle(is_planted.begin(), is_planted.end(), rng);

  const Timestamp origin = at("2016-09-27T01:00:00Z");
  const auto span_ms = static_cast<long long>(minutes) * 60000;
  Corpus corpus;
  std::size_t next_pair = 0;
  std::size_t pair_use = 0;
  for (std::size_t i = 0; i < posts; ++i) {
    Post p;
    p.id = "s" + std::to_string(i);
    p.created_at = origin + std::chrono::seconds(
                                static_cast<long long>(i) * span_ms / static_cast<long long>(posts) / 1000);
    if (is_planted[i]) {
      p.text = "alpha and bravo with charlie near delta #debate";
    } else {
      auto [a, b] = pairs[next_pair % pairs.size()];
      if (++pair_use >= max_pair_posts) {
        pair_use = 0;
        ++next_pair;
      }
      p.text = "talking about noise" + std::to_string(a) + "x vs noise" + std::to_string(b) +
               "x http://t.co/abc";
    }
    corpus.push_back(std::move(p));
  }
  write_corpus(world.corpus, corpus);
  return world;
}

}  // namespace semtopic::testing
