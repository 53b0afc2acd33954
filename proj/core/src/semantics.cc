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
#include "semtopic/semantics.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "builtin_temporal.h"
#include "http_client.h"
#include "semtopic/errors.h"
#include "semtopic/graph.h"
#include "text_util.h"

namespace semtopic {
namespace {

using internal::ascii_lower;
using internal::is_digit;
using internal::is_word_byte;
using nlohmann::json;

std::string read_file(const std::filesystem::path& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open {} {}", what, path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("{}: invalid JSON: {}", what, e.what()));
  }
}

bool is_handle_byte(char c) { return internal::is_ascii_alnum(c) || c == '_'; }

// Four digit numbers in s that are not part of a longer digit run.
std::vector<std::string_view> standalone_years(std::string_view s) {
  std::vector<std::string_view> years;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!is_digit(s[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && is_digit(s[j])) ++j;
    if (j - i == 4) years.push_back(s.substr(i, 4));
    i = j;
  }
  return years;
}

bool mentions_year(std::string_view text, std::string_view year) {
  for (std::string_view y : standalone_years(text)) {
    if (y == year) return true;
  }
  return false;
}

std::string_view local_name(std::string_view iri) {
  auto cut = iri.find_last_of("/#");
  return cut == std::string_view::npos ? iri : iri.substr(cut + 1);
}

std::string sparql_iri(std::string_view iri) {
  std::string out = "<";
  for (char c : iri) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' ||
        c == '|' || c == '^' || c == '`' || c == '\\') {
      out += fmt::format("%{:02X}", u);
    } else {
      out.push_back(c);
    }
  }
  out.push_back('>');
  return out;
}

bool follows_preposition(std::string_view text, std::size_t begin) {
  std::size_t j = begin;
  while (j > 0 && internal::is_space(text[j - 1])) --j;
  if (j == begin) return false;  // the spot must be separated from the word
  std::size_t end = j;
  while (j > 0 && is_word_byte(text[j - 1])) --j;
  if (end - j != 2) return false;
  std::string word = ascii_lower(text.substr(j, 2));
  return word == "in" || word == "on" || word == "at";
}

std::string ns_base(internal::TemporalNs ns, std::string_view topico_base) {
  switch (ns) {
    case internal::TemporalNs::kTopico:
      return std::string(topico_base);
    case internal::TemporalNs::kTime:
      return std::string(ns::kTime);
    case internal::TemporalNs::kGreg:
      return std::string(ns::kGreg);
  }
  return {};
}

}  // namespace

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::kPerson:
      return "Person";
    case ElementKind::kLocation:
      return "Location";
    case ElementKind::kTemporalExpression:
      return "TemporalExpression";
    case ElementKind::kOther:
      return "Other";
  }
  return "Other";
}

ElementKind parse_element_kind(std::string_view name) {
  if (name == "Person") return ElementKind::kPerson;
  if (name == "Location") return ElementKind::kLocation;
  if (name == "TemporalExpression") return ElementKind::kTemporalExpression;
  if (name == "Other") return ElementKind::kOther;
  throw std::invalid_argument(fmt::format("unknown element kind \"{}\"", name));
}

// --- Mentions ---------------------------------------------------------------

HandleMap::HandleMap(std::vector<HandleEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const HandleEntry& e = entries_[i];
    if (e.handle.size() < 2 || e.handle.front() != '@') {
      throw InputError(fmt::format("handle \"{}\" must start with '@'", e.handle));
    }
    if (!std::all_of(e.handle.begin() + 1, e.handle.end(), is_handle_byte)) {
      throw InputError(fmt::format("handle \"{}\" has invalid characters", e.handle));
    }
    if (!index_.emplace(ascii_lower(e.handle), i).second) {
      throw InputError(fmt::format("duplicate handle \"{}\"", e.handle));
    }
  }
}

HandleMap HandleMap::parse(std::string_view text) {
  json doc = parse_json(text, "handle map");
  if (!doc.is_array()) throw InputError("handle map: expected a JSON array");
  std::vector<HandleEntry> entries;
  for (const json& item : doc) {
    try {
      entries.push_back(HandleEntry{item.at("handle").get<std::string>(),
                                    item.at("display_name").get<std::string>(),
                                    item.at("entity_iri").get<std::string>()});
    } catch (const json::exception& e) {
      throw InputError(fmt::format("handle map entry {}: {}", entries.size(), e.what()));
    }
  }
  return HandleMap(std::move(entries));
}

HandleMap HandleMap::load(const std::filesystem::path& path) {
  return parse(read_file(path, "handle map"));
}

const HandleEntry* HandleMap::find(std::string_view handle) const {
  auto it = index_.find(ascii_lower(handle));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

ExpandedText expand_mentions(std::string_view text, const HandleMap& handles) {
  ExpandedText out;
  out.text.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '@' && (i == 0 || !is_word_byte(text[i - 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() && is_handle_byte(text[j])) ++j;
      if (j > i + 1) {
        if (const HandleEntry* entry = handles.find(text.substr(i, j - i))) {
          Substitution sub;
          sub.handle = entry->handle;
          sub.entity_iri = entry->entity_iri;
          sub.original = Span{i, j};
          sub.expanded.begin = out.text.size();
          out.text += entry->display_name;
          sub.expanded.end = out.text.size();
          out.substitutions.push_back(std::move(sub));
          i = j;
          continue;
        }
      }
      out.text.append(text.substr(i, j - i));
      i = j;
      continue;
    }
    out.text.push_back(text[i++]);
  }
  return out;
}

// --- Temporal rules ----------------------------------------------------------

TemporalRuleSet::TemporalRuleSet(std::vector<TemporalRule> rules)
    : rules_(std::move(rules)) {
  std::set<std::size_t, std::greater<>> lengths;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    TemporalRule& rule = rules_[i];
    if (rule.spots.empty()) {
      throw InputError(fmt::format("temporal rule {} has no spots", rule.target_iri));
    }
    if (rule.target_iri.empty()) throw InputError("temporal rule without iri");
    for (std::string& spot : rule.spots) {
      spot = ascii_lower(spot);
      if (spot.empty()) throw InputError("temporal rule with an empty spot");
      auto [it, inserted] = by_variant_.emplace(spot, i);
      if (!inserted) {
        throw InputError(fmt::format("temporal spot \"{}\" used by {} and {}", spot,
                                     rules_[it->second].target_iri, rule.target_iri));
      }
      lengths.insert(spot.size());
    }
    targets_.insert(rule.target_iri);
  }
  lengths_.assign(lengths.begin(), lengths.end());
}

TemporalRuleSet TemporalRuleSet::builtin(std::string_view topico_base) {
  std::vector<TemporalRule> rules;
  for (const auto& row : internal::kBuiltinTemporal) {
    TemporalRule rule;
    rule.target_iri = ns_base(row.ns, topico_base) + std::string(row.local);
    for (std::string_view spot : row.spots) {
      if (!spot.empty()) rule.spots.emplace_back(spot);
    }
    rules.push_back(std::move(rule));
  }
  return TemporalRuleSet(std::move(rules));
}

TemporalRuleSet TemporalRuleSet::parse(std::string_view text) {
  json doc = parse_json(text, "temporal rules");
  if (!doc.is_array()) throw InputError("temporal rules: expected a JSON array");
  std::vector<TemporalRule> rules;
  for (const json& item : doc) {
    try {
      rules.push_back(TemporalRule{item.at("spots").get<std::vector<std::string>>(),
                                   item.at("iri").get<std::string>()});
    } catch (const json::exception& e) {
      throw InputError(fmt::format("temporal rule {}: {}", rules.size(), e.what()));
    }
  }
  return TemporalRuleSet(std::move(rules));
}

TemporalRuleSet TemporalRuleSet::load(const std::filesystem::path& path) {
  return parse(read_file(path, "temporal rules"));
}

bool TemporalRuleSet::is_target(std::string_view iri) const {
  return targets_.find(iri) != targets_.end();
}

const TemporalRule* TemporalRuleSet::find_variant(std::string_view spot) const {
  auto it = by_variant_.find(std::string(spot));
  return it == by_variant_.end() ? nullptr : &rules_[it->second];
}

std::vector<TemporalMatch> match_temporal_rules(std::string_view text,
                                                const TemporalRuleSet& rules) {
  const std::string lower = ascii_lower(text);
  std::vector<TemporalMatch> out;
  std::size_t i = 0;
  while (i < lower.size()) {
    const bool word_start = i == 0 || !is_word_byte(lower[i - 1]);
    bool matched = false;
    if (word_start && is_word_byte(lower[i])) {
      for (std::size_t len : rules.variant_lengths()) {
        if (len > lower.size() - i) continue;
        std::string_view candidate(lower.data() + i, len);
        const TemporalRule* rule = rules.find_variant(candidate);
        if (rule == nullptr || !internal::on_word_boundaries(lower, i, i + len)) {
          continue;
        }
        out.push_back(TemporalMatch{std::string(candidate), Span{i, i + len},
                                    rule->target_iri});
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  return out;
}

// --- Year filter ---------------------------------------------------------------

YearVerdict apply_year_filter(const Annotation& annotation, std::string_view text) {
  for (std::string_view year : standalone_years(local_name(annotation.entity_iri))) {
    if (!mentions_year(text, year)) return YearVerdict::kDrop;
  }
  return YearVerdict::kKeep;
}

// --- Types ---------------------------------------------------------------------

TypeDb TypeDb::parse(std::string_view text) {
  json doc = parse_json(text, "type database");
  if (!doc.is_object()) throw InputError("type database: expected a JSON object");
  std::map<std::string, std::set<std::string>, std::less<>> types;
  for (const auto& [iri, list] : doc.items()) {
    if (!list.is_array()) {
      throw InputError(fmt::format("type database: {} must map to an array", iri));
    }
    auto& set = types[iri];
    for (const json& t : list) {
      if (!t.is_string()) {
        throw InputError(fmt::format("type database: {} has a non-string type", iri));
      }
      set.insert(t.get<std::string>());
    }
  }
  return TypeDb(std::move(types));
}

TypeDb TypeDb::load(const std::filesystem::path& path) {
  return parse(read_file(path, "type database"));
}

const std::set<std::string>* TypeDb::find(std::string_view iri) const {
  auto it = types_.find(iri);
  return it == types_.end() ? nullptr : &it->second;
}

SparqlTypeSource::SparqlTypeSource(std::string endpoint,
                                   std::filesystem::path cache_dir, int retries)
    : endpoint_(std::move(endpoint)), retries_(retries) {
  if (endpoint_.empty()) throw ConfigError("type endpoint is empty");
  if (!cache_dir.empty()) {
    cache_ = std::make_unique<ResponseCache>(cache_dir / "types");
  }
}

std::string SparqlTypeSource::build_query(std::span<const std::string> chunk) {
  std::string query = "SELECT ?s ?t WHERE { VALUES ?s {";
  for (const std::string& iri : chunk) {
    query.push_back(' ');
    query += sparql_iri(iri);
  }
  query += " } ?s a ?t }";
  return query;
}

namespace {

std::map<std::string, std::set<std::string>> parse_sparql_types(
    std::string_view body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw MalformedResponse(fmt::format("SPARQL answer is not JSON: {}", e.what()));
  }
  std::map<std::string, std::set<std::string>> out;
  try {
    for (const json& row : doc.at("results").at("bindings")) {
      out[row.at("s").at("value").get<std::string>()].insert(
          row.at("t").at("value").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw MalformedResponse(fmt::format("unexpected SPARQL answer: {}", e.what()));
  }
  return out;
}

}  // namespace

std::map<std::string, std::set<std::string>> SparqlTypeSource::fetch_types(
    std::span<const std::string> chunk) {
  const std::string query = build_query(chunk);
  auto fetch = [&] {
    ++requests_;
    return internal::http_get(endpoint_,
                              {{"query", query},
                               {"format", "application/sparql-results+json"}},
                              retries_, "application/sparql-results+json");
  };
  if (!cache_) return parse_sparql_types(fetch());
  const std::string key =
      ResponseCache::digest(fmt::format("types\n{}\n{}", endpoint_, query));
  std::string body = cache_->lookup_or_fetch(key, fetch);
  try {
    return parse_sparql_types(body);
  } catch (const MalformedResponse&) {
    body = fetch();
    auto parsed = parse_sparql_types(body);
    cache_->store(key, body);
    return parsed;
  }
}

TypeMap resolve_entity_types(const std::set<std::string>& iris, const TypeDb* local,
                             TypeSource* remote, std::size_t chunk_size) {
  if (chunk_size == 0) throw std::invalid_argument("chunk_size must be positive");
  TypeMap out;
  std::vector<std::string> missing;
  for (const std::string& iri : iris) {
    TypeRecord record{iri, {}};
    if (local != nullptr) {
      if (const auto* types = local->find(iri)) {
        record.type_iris = *types;
        out.emplace(iri, std::move(record));
        continue;
      }
    }
    out.emplace(iri, std::move(record));
    missing.push_back(iri);
  }
  if (remote == nullptr) return out;
  for (std::size_t i = 0; i < missing.size(); i += chunk_size) {
    std::span<const std::string> chunk(missing.data() + i,
                                       std::min(chunk_size, missing.size() - i));
    for (auto& [iri, types] : remote->fetch_types(chunk)) {
      auto it = out.find(iri);
      // Answers about IRIs outside the chunk are ignored.
      if (it == out.end()) continue;
      it->second.type_iris.insert(types.begin(), types.end());
    }
  }
  return out;
}

// --- Classification ------------------------------------------------------------

TypeLists TypeLists::defaults() {
  TypeLists lists;
  lists.person = {std::string(ns::kFoaf) + "Person",
                  std::string(ns::kDbo) + "Person"};
  lists.location = {std::string(ns::kSchema) + "Place",
                    std::string(ns::kDbo) + "PopulatedPlace",
                    std::string(ns::kDbo) + "Place",
                    std::string(ns::kDbo) + "Location",
                    std::string(ns::kDbo) + "Settlement",
                    std::string(ns::kGeo) + "SpatialThing",
                    std::string(ns::kUmbel) + "PopulatedPlace"};
  return lists;
}

namespace {

std::size_t preposition_posts(const std::vector<LinkedPost>& posts,
                              std::string_view entity_iri) {
  std::size_t count = 0;
  for (const LinkedPost& post : posts) {
    bool hit = std::any_of(post.links.begin(), post.links.end(), [&](const Link& l) {
      return l.entity_iri == entity_iri && follows_preposition(post.text, l.span.begin);
    });
    if (hit) ++count;
  }
  return count;
}

bool intersects(const std::set<std::string>& types,
                const std::set<std::string, std::less<>>& list) {
  return std::any_of(types.begin(), types.end(),
                     [&](const std::string& t) { return list.count(t) > 0; });
}

}  // namespace

double preposition_ratio(const std::vector<LinkedPost>& posts,
                         std::string_view entity_iri, std::size_t batch_size) {
  if (batch_size == 0) return 0.0;
  return static_cast<double>(preposition_posts(posts, entity_iri)) /
         static_cast<double>(batch_size);
}

std::map<std::string, ElementKind> classify_elements(
    const std::vector<LinkedPost>& posts, std::size_t batch_size,
    const TypeMap& types, double tau_loc, const TypeLists& lists) {
  std::map<std::string, bool> temporal;  // element -> has a temporal-rule link
  for (const LinkedPost& post : posts) {
    for (const Link& link : post.links) {
      temporal[link.entity_iri] |= link.origin == LinkOrigin::kTemporal;
    }
  }
  static const std::set<std::string> kNoTypes;
  std::map<std::string, ElementKind> kinds;
  for (const auto& [iri, is_temporal] : temporal) {
    if (is_temporal) {
      kinds[iri] = ElementKind::kTemporalExpression;
      continue;
    }
    auto it = types.find(iri);
    const std::set<std::string>& type_set =
        it == types.end() ? kNoTypes : it->second.type_iris;
    if (intersects(type_set, lists.person)) {
      kinds[iri] = ElementKind::kPerson;
    } else if (intersects(type_set, lists.location) &&
               exceeds_fraction(preposition_posts(posts, iri), batch_size, tau_loc)) {
      kinds[iri] = ElementKind::kLocation;
    } else {
      kinds[iri] = ElementKind::kOther;
    }
  }
  return kinds;
}

}  // namespace semtopic
