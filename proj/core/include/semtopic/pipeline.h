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
#ifndef SEMTOPIC_PIPELINE_H_
#define SEMTOPIC_PIPELINE_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semtopic/cliques.h"
#include "semtopic/corpus.h"
#include "semtopic/emit.h"
#include "semtopic/graph.h"
#include "semtopic/linked_post.h"
#include "semtopic/linking.h"
#include "semtopic/semantics.h"
#include "semtopic/time.h"
#include "semtopic/vocab.h"

namespace semtopic {

enum class LinkerMode { kDictionary, kRemote };

struct PipelineConfig {
  double tau_rho = 0.15;
  double tau_p = 0.35;
  double tau_e = 0.001;
  double tau_e_min = 0.0005;
  double tau_loc = 0.01;
  double tau_kc = 0.01;
  double tau_c = 0.8;
  int interval_minutes = 2;

  LinkerMode linker = LinkerMode::kDictionary;
  std::filesystem::path dictionary;
  std::string linker_endpoint;
  std::string linker_token;
  std::string resource_base = "http://dbpedia.org/resource/";
  int max_in_flight = 4;

  std::filesystem::path type_db;
  std::string type_endpoint;
  std::filesystem::path temporal_rules;  // empty: built-in table
  std::filesystem::path handle_map;
  std::filesystem::path cache_dir;
  std::filesystem::path out_dir = "out";

  std::string topico_base = std::string(ns::kTopico);
  std::string topic_base = std::string(kDefaultTopicBase);
  std::string maker = std::string(kDefaultMaker);
  // Creation time stamped on topics; the end of each batch when unset.
  std::optional<Timestamp> created_at;

  int workers = 1;
  std::size_t clique_max_vertices = 0;
  long clique_time_limit_ms = 0;
  bool dump_links = false;
  bool dump_graph = false;

  // Sets one key of the key=value format. Throws ConfigError for unknown
  // keys or unparsable values.
  void set(std::string_view key, std::string_view value);

  // Throws ConfigError when a threshold leaves [0, 1], tau_e_min > tau_e,
  // interval_minutes < 1 or workers < 1.
  void validate() const;

  LinkerConfig linker_config() const;

  // Flat "key = value" lines; '#' starts a comment. Keys match the field
  // names above.
  static PipelineConfig parse(std::istream& in);
  static PipelineConfig load(const std::filesystem::path& path);
};

// Shared, read-only resources of a run.
struct Resources {
  std::unique_ptr<EntityLinker> linker;
  HandleMap handles;
  TemporalRuleSet rules = TemporalRuleSet::builtin();
  TypeDb types;
  std::unique_ptr<TypeSource> type_source;
  TopicoVocab vocab;

  static Resources from_config(const PipelineConfig& config);
};

// Candidate elements of one post: preprocess, expand mentions, link, match
// temporal rules and apply the year filter. Linker annotations overlapping an
// expanded mention or a temporal match yield to them. Rejected annotations
// become unlinked spots; year-filtered ones are discarded.
LinkedPost extract_candidates(const Post& post, const Resources& resources,
                              const PipelineConfig& config);

// Per-batch counts. The pct_* fields give the share of the batch's posts
// that produce vertices or edges of the graph before pruning, after pruning
// and in the final topics.
struct BatchReport {
  Timestamp start;
  Timestamp end;
  std::size_t posts = 0;
  std::size_t spots = 0;     // candidate spots, linked or not
  std::size_t linked = 0;    // links after consolidation
  std::size_t unlinked_dropped = 0;
  std::size_t vertices_before = 0;
  std::size_t edges_before = 0;
  std::size_t vertices_pruned = 0;
  std::size_t edges_pruned = 0;
  std::size_t cliques = 0;
  std::size_t cliques_kept = 0;
  std::size_t topics = 0;
  double pct_vertices_before = 0.0;
  double pct_vertices_pruned = 0.0;
  double pct_vertices_topic = 0.0;
  double pct_edges_before = 0.0;
  double pct_edges_pruned = 0.0;
  double pct_edges_topic = 0.0;
  std::optional<std::string> error;
};

struct BatchResult {
  BatchReport report;
  std::vector<LinkedPost> posts;  // consolidated
  std::vector<LinkedPost> raw_posts;
  CoocGraph graph;
  CoocGraph pruned;
  std::vector<Clique> cliques;  // before the small-clique filter
  TopicSet topic_set;
  std::map<std::string, ElementKind> kinds;
  std::vector<Topic> topics;
};

// Runs every stage on one batch. Exceptions propagate.
BatchResult process_batch(const IntervalBatch& batch, const Resources& resources,
                          const PipelineConfig& config, Timestamp now);

struct RunReport {
  std::vector<BatchReport> batches;
  std::size_t topics = 0;
  std::size_t failed_batches = 0;

  std::string to_json() const;
};

// Loads the corpus, processes its batches on config.workers threads and
// writes under config.out_dir:
//   topics.ttl, topics.json          all topics
//   batches/<start>.ttl, .json       per batch
//   report.json                      per-batch counts
//   debug/<start>.links.json, .graph.tsv   with dump_links / dump_graph
// A failing batch is logged and recorded in the report; the others proceed.
RunReport run_pipeline(const std::filesystem::path& corpus_path,
                       const PipelineConfig& config);

// Spot -> entity table of a consolidated batch as JSON.
std::string links_table_json(const std::vector<LinkedPost>& posts);

}  // namespace semtopic

#endif  // SEMTOPIC_PIPELINE_H_
