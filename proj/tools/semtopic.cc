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
// Command line front end: runs the pipeline and the topic analyses.

#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "semtopic/analyze.h"
#include "semtopic/errors.h"
#include "semtopic/pipeline.h"

namespace {

using semtopic::PipelineConfig;

struct RunFlags {
  std::filesystem::path config;
  std::optional<int> interval_minutes;
  std::optional<std::string> linker;
  std::optional<std::string> dictionary;
  std::optional<std::string> cache_dir;
  std::optional<std::string> out_dir;
  std::optional<int> workers;
  std::optional<std::string> created_at;
  bool dump_links = false;
  bool dump_graph = false;
  std::filesystem::path corpus;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("corpus", f.corpus, "JSON lines post file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--config", f.config, "key = value configuration file")->check(CLI::ExistingFile);
  cmd->add_option("--interval-minutes", f.interval_minutes, "batch width in minutes");
  cmd->add_option("--linker", f.linker, "dictionary or remote");
  cmd->add_option("--dictionary", f.dictionary, "dictionary linker file");
  cmd->add_option("--cache-dir", f.cache_dir, "response cache directory");
  cmd->add_option("--out-dir", f.out_dir, "output directory");
  cmd->add_option("--workers", f.workers, "parallel batches");
  cmd->add_option("--created-at", f.created_at,
                  "creation time stamped on topics (RFC 3339); default: batch end");
}

PipelineConfig make_config(const RunFlags& f) {
  PipelineConfig config = f.config.empty() ? PipelineConfig{} : PipelineConfig::load(f.config);
  if (f.interval_minutes) config.set("interval_minutes", std::to_string(*f.interval_minutes));
  if (f.linker) config.set("linker", *f.linker);
  if (f.dictionary) config.set("dictionary", *f.dictionary);
  if (f.cache_dir) config.set("cache_dir", *f.cache_dir);
  if (f.out_dir) config.set("out_dir", *f.out_dir);
  if (f.workers) config.set("workers", std::to_string(*f.workers));
  if (f.created_at) config.set("created_at", *f.created_at);
  if (f.dump_links) config.dump_links = true;
  if (f.dump_graph) config.dump_graph = true;
  config.validate();
  return config;
}

// Runs the extraction stages batch by batch and hands each result to visit.
template <typename Visit>
void for_each_batch(const RunFlags& f, Visit visit) {
  const PipelineConfig config = make_config(f);
  const auto resources = semtopic::Resources::from_config(config);
  const auto corpus = semtopic::load_posts(f.corpus);
  for (const auto& batch : semtopic::partition_intervals(corpus, config.interval_minutes)) {
    if (batch.posts.empty()) continue;
    visit(batch, semtopic::process_batch(batch, resources, config,
                                         config.created_at.value_or(batch.end)));
  }
}

std::string interval_json(const std::vector<semtopic::Interval>& intervals) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& i : intervals) {
    out.push_back({{"start", semtopic::format_rfc3339(i.start)},
                   {"end", semtopic::format_rfc3339(i.end)}});
  }
  return out.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantic topic extraction from microposts"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "debug logging");

  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "extract topics from a corpus");
  add_run_flags(run, run_flags);
  run->add_flag("--dump-links", run_flags.dump_links, "write per-batch link tables");
  run->add_flag("--dump-graph", run_flags.dump_graph, "write per-batch edge lists");

  RunFlags graph_flags;
  bool pruned = false;
  auto* dump_graph = app.add_subcommand("dump-graph", "print per-batch co-occurrence graphs");
  add_run_flags(dump_graph, graph_flags);
  dump_graph->add_flag("--pruned", pruned, "print the graph after pruning");

  RunFlags links_flags;
  auto* dump_links = app.add_subcommand("dump-links", "print per-batch link tables");
  add_run_flags(dump_links, links_flags);

  auto* analyze = app.add_subcommand("analyze", "query emitted topic JSON");
  analyze->require_subcommand(1);
  std::vector<std::filesystem::path> topic_paths;
  std::string anchor;
  auto* co = analyze->add_subcommand("co-persons", "persons sharing topics with an anchor person");
  co->add_option("--anchor", anchor, "person IRI")->required();
  co->add_option("topics", topic_paths, "topic JSON files or directories")->required();

  std::vector<std::string> targets;
  auto* intervals = analyze->add_subcommand("intervals", "intervals of topics containing any target");
  intervals->add_option("--target", targets, "element IRI (repeatable)")->required();
  intervals->add_option("topics", topic_paths, "topic JSON files or directories")->required();

  std::vector<std::string> persons;
  std::size_t top_k = 10;
  auto* timeline = analyze->add_subcommand("timeline", "isAbout elements over time per person");
  timeline->add_option("--person", persons, "person IRI (repeatable)")->required();
  timeline->add_option("--top-k", top_k, "number of elements")->check(CLI::PositiveNumber);
  timeline->add_option("topics", topic_paths, "topic JSON files or directories")->required();

  CLI11_PARSE(app, argc, argv);
  spdlog::set_default_logger(spdlog::stderr_color_mt("semtopic"));
  spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::info);

  try {
    if (run->parsed()) {
      const auto report = semtopic::run_pipeline(run_flags.corpus, make_config(run_flags));
      return report.failed_batches == 0 ? 0 : 3;
    }
    if (dump_graph->parsed()) {
      for_each_batch(graph_flags, [&](const semtopic::IntervalBatch& batch,
                                      const semtopic::BatchResult& r) {
        std::cout << "# " << semtopic::format_rfc3339(batch.start) << '\n';
        semtopic::write_edge_list(std::cout, pruned ? r.pruned : r.graph);
      });
      return 0;
    }
    if (dump_links->parsed()) {
      for_each_batch(links_flags, [&](const semtopic::IntervalBatch& batch,
                                      const semtopic::BatchResult& r) {
        std::cout << "# " << semtopic::format_rfc3339(batch.start) << '\n'
                  << semtopic::links_table_json(r.posts);
      });
      return 0;
    }
    const auto index = semtopic::TopicIndex::load(topic_paths);
    if (co->parsed()) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& pc : semtopic::co_persons(index, anchor)) {
        out.push_back({{"person", pc.person}, {"topics", pc.topics}});
      }
      std::cout << out.dump(2) << '\n';
    } else if (intervals->parsed()) {
      std::cout << interval_json(semtopic::intervals_with(
                       index, std::set<std::string>(targets.begin(), targets.end())))
                << '\n';
    } else if (timeline->parsed()) {
      const std::set<std::string> who(persons.begin(), persons.end());
      semtopic::write_timeline_csv(std::cout, semtopic::element_timeline(index, who, top_k), who);
    }
  } catch (const semtopic::ConfigError& e) {
    spdlog::error("configuration: {}", e.what());
    return 2;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
