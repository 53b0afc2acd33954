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
#include "semtopic/pipeline.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <istream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "semtopic/collective.h"
#include "semtopic/errors.h"
#include "text_util.h"

namespace semtopic {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && internal::is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && internal::is_space(s.back())) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    double d = std::stod(std::string(value), &used);
    if (used == value.size()) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError(fmt::format("{}: not a number: '{}'", key, value));
}

long parse_integer(std::string_view key, std::string_view value) {
  long n = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(fmt::format("{}: not an integer: '{}'", key, value));
  }
  return n;
}

bool parse_bool(std::string_view key, std::string_view value) {
  const std::string v = internal::ascii_lower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(fmt::format("{}: not a boolean: '{}'", key, value));
}

void check_unit(std::string_view name, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ConfigError(fmt::format("{} = {} is outside [0, 1]", name, v));
  }
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
}

bool overlaps_any(const Span& span, const std::vector<Span>& taken) {
  return std::any_of(taken.begin(), taken.end(),
                     [&](const Span& t) { return span.overlaps(t); });
}

double percent(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

// Post shares for the run report: posts with a vertex of g, and posts holding both
// ends of an edge of g.
std::pair<std::size_t, std::size_t> graph_post_shares(
    const std::vector<std::vector<std::string>>& elements, const CoocGraph& g) {
  std::size_t with_vertex = 0;
  std::size_t with_edge = 0;
  for (const auto& post : elements) {
    std::vector<CoocGraph::VertexId> ids;
    for (const std::string& e : post) {
      if (auto id = g.find(e)) ids.push_back(*id);
    }
    if (ids.empty()) continue;
    ++with_vertex;
    bool edge = false;
    for (std::size_t i = 0; i < ids.size() && !edge; ++i) {
      for (std::size_t j = i + 1; j < ids.size() && !edge; ++j) {
        edge = g.pair_count(ids[i], ids[j]) > 0;
      }
    }
    if (edge) ++with_edge;
  }
  return {with_vertex, with_edge};
}

std::pair<std::size_t, std::size_t> topic_post_shares(
    const std::vector<std::vector<std::string>>& elements, const TopicSet& set) {
  std::set<std::string, std::less<>> in_topic;
  for (const Clique& t : set.topics) in_topic.insert(t.begin(), t.end());
  std::size_t with_vertex = 0;
  std::size_t with_edge = 0;
  for (const auto& post : elements) {
    if (std::any_of(post.begin(), post.end(),
                    [&](const std::string& e) { return in_topic.count(e) > 0; })) {
      ++with_vertex;
    }
    for (const Clique& t : set.topics) {
      std::size_t hits = 0;
      for (const std::string& e : post) {
        if (std::binary_search(t.begin(), t.end(), e)) ++hits;
      }
      if (hits >= 2) {
        ++with_edge;
        break;
      }
    }
  }
  return {with_vertex, with_edge};
}

json report_json(const BatchReport& r) {
  json j{{"start", format_rfc3339(r.start)},
         {"end", format_rfc3339(r.end)},
         {"posts", r.posts},
         {"spots", r.spots},
         {"linked", r.linked},
         {"unlinked_dropped", r.unlinked_dropped},
         {"vertices_before", r.vertices_before},
         {"edges_before", r.edges_before},
         {"vertices_pruned", r.vertices_pruned},
         {"edges_pruned", r.edges_pruned},
         {"cliques", r.cliques},
         {"cliques_kept", r.cliques_kept},
         {"topics", r.topics},
         {"pct_posts",
          {{"vertices_before", r.pct_vertices_before},
           {"edges_before", r.pct_edges_before},
           {"vertices_pruned", r.pct_vertices_pruned},
           {"edges_pruned", r.pct_edges_pruned},
           {"vertices_topic", r.pct_vertices_topic},
           {"edges_topic", r.pct_edges_topic}}}};
  if (r.error) j["error"] = *r.error;
  return j;
}

json links_json(const LinkedPost& post) {
  json links = json::array();
  for (const Link& l : post.links) {
    links.push_back({{"spot", l.spot},
                     {"begin", l.span.begin},
                     {"end", l.span.end},
                     {"entity", l.entity_iri},
                     {"origin", std::string(to_string(l.origin))}});
  }
  json unlinked = json::array();
  for (const UnlinkedSpot& u : post.unlinked) {
    unlinked.push_back({{"spot", u.spot}, {"begin", u.span.begin}, {"end", u.span.end}});
  }
  return json{{"id", post.post_id}, {"text", post.text}, {"links", links},
              {"unlinked", unlinked}};
}

}  // namespace

void PipelineConfig::set(std::string_view key, std::string_view raw) {
  const std::string_view value = trim(raw);
  const std::string k(trim(key));
  if (k == "tau_rho") tau_rho = parse_real(k, value);
  else if (k == "tau_p") tau_p = parse_real(k, value);
  else if (k == "tau_e") tau_e = parse_real(k, value);
  else if (k == "tau_e_min") tau_e_min = parse_real(k, value);
  else if (k == "tau_loc") tau_loc = parse_real(k, value);
  else if (k == "tau_kc") tau_kc = parse_real(k, value);
  else if (k == "tau_c") tau_c = parse_real(k, value);
  else if (k == "interval_minutes") interval_minutes = static_cast<int>(parse_integer(k, value));
  else if (k == "linker") {
    if (value == "dictionary") linker = LinkerMode::kDictionary;
    else if (value == "remote") linker = LinkerMode::kRemote;
    else throw ConfigError(fmt::format("linker: expected dictionary or remote, got '{}'", value));
  }
  else if (k == "dictionary") dictionary = std::string(value);
  else if (k == "linker_endpoint") linker_endpoint = std::string(value);
  else if (k == "linker_token") linker_token = std::string(value);
  else if (k == "resource_base") resource_base = std::string(value);
  else if (k == "max_in_flight") max_in_flight = static_cast<int>(parse_integer(k, value));
  else if (k == "type_db") type_db = std::string(value);
  else if (k == "type_endpoint") type_endpoint = std::string(value);
  else if (k == "temporal_rules") temporal_rules = std::string(value);
  else if (k == "handle_map") handle_map = std::string(value);
  else if (k == "cache_dir") cache_dir = std::string(value);
  else if (k == "out_dir") out_dir = std::string(value);
  else if (k == "topico_base") topico_base = std::string(value);
  else if (k == "topic_base") topic_base = std::string(value);
  else if (k == "maker") maker = std::string(value);
  else if (k == "created_at") {
    if (value.empty()) {
      created_at.reset();
    } else {
      try {
        created_at = parse_rfc3339(value);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(fmt::format("created_at: {}", e.what()));
      }
    }
  }
  else if (k == "workers") workers = static_cast<int>(parse_integer(k, value));
  else if (k == "clique_max_vertices") {
    long n = parse_integer(k, value);
    if (n < 0) throw ConfigError("clique_max_vertices must not be negative");
    clique_max_vertices = static_cast<std::size_t>(n);
  }
  else if (k == "clique_time_limit_ms") clique_time_limit_ms = parse_integer(k, value);
  else if (k == "dump_links") dump_links = parse_bool(k, value);
  else if (k == "dump_graph") dump_graph = parse_bool(k, value);
  else throw ConfigError(fmt::format("unknown configuration key '{}'", k));
}

void PipelineConfig::validate() const {
  check_unit("tau_rho", tau_rho);
  check_unit("tau_p", tau_p);
  check_unit("tau_e", tau_e);
  check_unit("tau_e_min", tau_e_min);
  check_unit("tau_loc", tau_loc);
  check_unit("tau_kc", tau_kc);
  check_unit("tau_c", tau_c);
  if (tau_e_min > tau_e) {
    throw ConfigError(fmt::format("tau_e_min = {} exceeds tau_e = {}", tau_e_min, tau_e));
  }
  if (interval_minutes < 1) throw ConfigError("interval_minutes must be at least 1");
  if (workers < 1) throw ConfigError("workers must be at least 1");
  if (max_in_flight < 1 || max_in_flight > 64) {
    throw ConfigError("max_in_flight must be between 1 and 64");
  }
  if (clique_time_limit_ms < 0) throw ConfigError("clique_time_limit_ms must not be negative");
  if (linker == LinkerMode::kDictionary && dictionary.empty()) {
    throw ConfigError("dictionary linker selected but no dictionary given");
  }
  if (linker == LinkerMode::kRemote && linker_endpoint.empty()) {
    throw ConfigError("remote linker selected but no linker_endpoint given");
  }
}

LinkerConfig PipelineConfig::linker_config() const {
  LinkerConfig lc;
  lc.tau_rho = tau_rho;
  lc.tau_p = tau_p;
  lc.endpoint = linker_endpoint;
  lc.token = linker_token;
  lc.resource_base = resource_base;
  lc.cache_dir = cache_dir;
  lc.max_in_flight = max_in_flight;
  return lc;
}

PipelineConfig PipelineConfig::parse(std::istream& in) {
  PipelineConfig config;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("line {}: expected key = value", number));
    }
    try {
      config.set(view.substr(0, eq), view.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(fmt::format("line {}: {}", number, e.what()));
    }
  }
  return config;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config {}", path.string()));
  PipelineConfig config = parse(in);
  // Relative paths in a config file are relative to the file.
  const auto base = path.parent_path();
  for (std::filesystem::path* p :
       {&config.dictionary, &config.type_db, &config.temporal_rules,
        &config.handle_map, &config.cache_dir, &config.out_dir}) {
    if (!p->empty() && p->is_relative()) *p = base / *p;
  }
  return config;
}

Resources Resources::from_config(const PipelineConfig& config) {
  config.validate();
  Resources r;
  if (config.linker == LinkerMode::kDictionary) {
    r.linker = std::make_unique<DictionaryLinker>(DictionaryLinker::load(config.dictionary));
  } else {
    r.linker = std::make_unique<RemoteLinker>(config.linker_config());
  }
  if (!config.handle_map.empty()) r.handles = HandleMap::load(config.handle_map);
  r.rules = config.temporal_rules.empty() ? TemporalRuleSet::builtin(config.topico_base)
                                          : TemporalRuleSet::load(config.temporal_rules);
  if (!config.type_db.empty()) r.types = TypeDb::load(config.type_db);
  if (!config.type_endpoint.empty()) {
    r.type_source = std::make_unique<SparqlTypeSource>(config.type_endpoint, config.cache_dir);
  }
  r.vocab = TopicoVocab(config.topico_base);
  return r;
}

LinkedPost extract_candidates(const Post& post, const Resources& resources,
                              const PipelineConfig& config) {
  LinkedPost out;
  out.post_id = post.id;
  ExpandedText expanded = expand_mentions(preprocess_text(post.text), resources.handles);
  out.text = std::move(expanded.text);

  std::vector<Span> taken;
  for (const Substitution& s : expanded.substitutions) {
    const HandleEntry* entry = resources.handles.find(s.handle);
    std::string spot = out.text.substr(s.expanded.begin, s.expanded.length());
    if (entry != nullptr) spot = internal::ascii_lower(entry->display_name);
    out.links.push_back(Link{internal::ascii_lower(spot), s.expanded, s.entity_iri,
                             LinkOrigin::kMention});
    taken.push_back(s.expanded);
  }
  for (TemporalMatch& m : match_temporal_rules(out.text, resources.rules)) {
    if (overlaps_any(m.span, taken)) continue;
    taken.push_back(m.span);
    out.links.push_back(Link{std::move(m.spot), m.span, std::move(m.target_iri),
                             LinkOrigin::kTemporal});
  }

  LinkOutcome outcome =
      filter_annotations(resources.linker->link(out.text), config.linker_config());
  for (Annotation& a : outcome.accepted) {
    if (overlaps_any(a.span, taken)) continue;
    if (apply_year_filter(a, out.text) == YearVerdict::kDrop) continue;
    out.links.push_back(Link{std::move(a.spot), a.span, std::move(a.entity_iri),
                             LinkOrigin::kLinker});
  }
  for (Annotation& a : outcome.rejected) {
    if (overlaps_any(a.span, taken)) continue;
    out.unlinked.push_back(UnlinkedSpot{std::move(a.spot), a.span});
  }
  std::sort(out.links.begin(), out.links.end(),
            [](const Link& x, const Link& y) { return x.span < y.span; });
  return out;
}

BatchResult process_batch(const IntervalBatch& batch, const Resources& resources,
                          const PipelineConfig& config, Timestamp now) {
  BatchResult result;
  BatchReport& report = result.report;
  report.start = batch.start;
  report.end = batch.end;
  report.posts = batch.size();

  result.raw_posts.reserve(batch.posts.size());
  for (const Post& post : batch.posts) {
    result.raw_posts.push_back(extract_candidates(post, resources, config));
    report.spots += result.raw_posts.back().links.size() +
                    result.raw_posts.back().unlinked.size();
  }
  result.posts = consolidate_links(result.raw_posts);
  for (const LinkedPost& p : result.posts) report.linked += p.links.size();
  report.unlinked_dropped = report.spots - std::min(report.spots, report.linked);

  std::set<std::string> iris;
  for (const LinkedPost& p : result.posts) {
    for (const Link& l : p.links) {
      if (l.origin != LinkOrigin::kTemporal) iris.insert(l.entity_iri);
    }
  }
  const TypeMap types = resolve_entity_types(iris, &resources.types, resources.type_source.get());
  result.kinds = classify_elements(result.posts, batch.size(), types, config.tau_loc);

  result.graph = CoocGraph::build(result.posts, batch.size());
  result.pruned = prune_graph(result.graph, config.tau_e);
  report.vertices_before = result.graph.vertex_count();
  report.edges_before = result.graph.edge_count();
  report.vertices_pruned = result.pruned.vertex_count();
  report.edges_pruned = result.pruned.edge_count();

  CliqueBudget budget;
  budget.max_vertices = config.clique_max_vertices;
  budget.time_limit = std::chrono::milliseconds(config.clique_time_limit_ms);
  result.cliques = enumerate_maximal_cliques(result.pruned, budget);
  std::vector<Clique> kept = filter_small_cliques(result.cliques, result.graph, config.tau_kc);
  report.cliques = result.cliques.size();
  report.cliques_kept = kept.size();
  result.topic_set =
      merge_similar_cliques(std::move(kept), result.graph, config.tau_c, config.tau_e_min);
  result.topics = instantiate_topics(result.topic_set, result.kinds, batch, now,
                                     config.maker, config.topic_base);
  report.topics = result.topics.size();

  std::vector<std::vector<std::string>> elements;
  elements.reserve(result.posts.size());
  for (const LinkedPost& p : result.posts) elements.push_back(p.elements());
  auto [v_before, e_before] = graph_post_shares(elements, result.graph);
  auto [v_pruned, e_pruned] = graph_post_shares(elements, result.pruned);
  auto [v_topic, e_topic] = topic_post_shares(elements, result.topic_set);
  report.pct_vertices_before = percent(v_before, report.posts);
  report.pct_edges_before = percent(e_before, report.posts);
  report.pct_vertices_pruned = percent(v_pruned, report.posts);
  report.pct_edges_pruned = percent(e_pruned, report.posts);
  report.pct_vertices_topic = percent(v_topic, report.posts);
  report.pct_edges_topic = percent(e_topic, report.posts);
  return result;
}

std::string RunReport::to_json() const {
  json list = json::array();
  for (const BatchReport& b : batches) list.push_back(report_json(b));
  json doc{{"batches", std::move(list)},
           {"topics", topics},
           {"failed_batches", failed_batches}};
  return doc.dump(2) + "\n";
}

std::string links_table_json(const std::vector<LinkedPost>& posts) {
  json table = json::object();
  for (const auto& [spot, links] : spot_link_table(posts)) {
    table[spot] = {{"dominant", links.dominant}, {"counts", links.counts}};
  }
  json doc{{"spots", std::move(table)}, {"posts", json::array()}};
  for (const LinkedPost& p : posts) doc["posts"].push_back(links_json(p));
  return doc.dump(2) + "\n";
}

RunReport run_pipeline(const std::filesystem::path& corpus_path,
                       const PipelineConfig& config) {
  config.validate();
  const Resources resources = Resources::from_config(config);
  const Corpus corpus = load_posts(corpus_path);
  const std::vector<IntervalBatch> batches =
      partition_intervals(corpus, config.interval_minutes);
  spdlog::info("{} posts in {} batches of {} minutes", corpus.size(), batches.size(),
               config.interval_minutes);

  std::vector<std::optional<BatchResult>> results(batches.size());
  std::vector<BatchReport> reports(batches.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < batches.size(); i = next++) {
      try {
        results[i] = process_batch(batches[i], resources, config,
                                   config.created_at.value_or(batches[i].end));
        reports[i] = results[i]->report;
      } catch (const std::exception& e) {
        spdlog::error("batch {} failed: {}", format_rfc3339(batches[i].start), e.what());
        reports[i].start = batches[i].start;
        reports[i].end = batches[i].end;
        reports[i].posts = batches[i].size();
        reports[i].error = e.what();
      }
    }
  };
  const std::size_t width =
      std::min<std::size_t>(static_cast<std::size_t>(config.workers), std::max<std::size_t>(batches.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  RunReport run;
  std::vector<Topic> all;
  for (std::size_t i = 0; i < batches.size(); ++i) {
    run.batches.push_back(reports[i]);
    if (reports[i].error) {
      ++run.failed_batches;
      continue;
    }
    const BatchResult& r = *results[i];
    const std::string stem = format_compact(batches[i].start);
    if (!r.topics.empty()) {
      write_file(config.out_dir / "batches" / (stem + ".ttl"),
                 serialize_turtle(r.topics, resources.vocab));
      write_file(config.out_dir / "batches" / (stem + ".json"), serialize_json(r.topics));
    }
    if (config.dump_links) {
      write_file(config.out_dir / "debug" / (stem + ".links.json"), links_table_json(r.posts));
    }
    if (config.dump_graph) {
      std::ostringstream graph;
      write_edge_list(graph, r.graph);
      write_file(config.out_dir / "debug" / (stem + ".graph.tsv"), graph.str());
    }
    all.insert(all.end(), r.topics.begin(), r.topics.end());
  }
  run.topics = all.size();
  write_file(config.out_dir / "topics.ttl", serialize_turtle(all, resources.vocab));
  write_file(config.out_dir / "topics.json", serialize_json(all));
  write_file(config.out_dir / "report.json", run.to_json());
  spdlog::info("{} topics, {} failed batches", run.topics, run.failed_batches);
  return run;
}

}  // namespace semtopic
