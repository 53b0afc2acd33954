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
#ifndef SEMTOPIC_SEMANTICS_H_
#define SEMTOPIC_SEMANTICS_H_

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semtopic/cache.h"
#include "semtopic/linked_post.h"
#include "semtopic/linking.h"
#include "semtopic/namespaces.h"
#include "semtopic/span.h"

namespace semtopic {

enum class ElementKind { kPerson, kLocation, kTemporalExpression, kOther };

std::string_view to_string(ElementKind kind);
// Accepts the names produced by to_string. Throws std::invalid_argument.
ElementKind parse_element_kind(std::string_view name);

// ---------------------------------------------------------------------------
// Mention expansion

struct HandleEntry {
  std::string handle;  // including the leading '@'
  std::string display_name;
  std::string entity_iri;
};

// Handles compare case-insensitively, as they do on the platform.
class HandleMap {
 public:
  HandleMap() = default;
  // Throws InputError on a duplicate handle or one not starting with '@'.
  explicit HandleMap(std::vector<HandleEntry> entries);

  // JSON array of {"handle", "display_name", "entity_iri"}.
  static HandleMap load(const std::filesystem::path& path);
  static HandleMap parse(std::string_view json);

  const HandleEntry* find(std::string_view handle) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<HandleEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Substitution {
  std::string handle;
  std::string entity_iri;
  Span original;  // span of the handle in the input text
  Span expanded;  // span of the display name in the output text
};

struct ExpandedText {
  std::string text;
  std::vector<Substitution> substitutions;
};

// Replaces every known '@handle' with its display name. Unknown handles and
// every other byte are copied unchanged.
ExpandedText expand_mentions(std::string_view text, const HandleMap& handles);

// ---------------------------------------------------------------------------
// Temporal expressions

struct TemporalRule {
  std::vector<std::string> spots;  // lowercase variants
  std::string target_iri;
};

class TemporalRuleSet {
 public:
  // Throws InputError when a rule has no variants or a variant is shared by
  // two rules.
  explicit TemporalRuleSet(std::vector<TemporalRule> rules);

  // The shipped table of 42 rules (relative expressions, weekdays, months,
  // seasons and parts of the day).
  static TemporalRuleSet builtin(
      std::string_view topico_base = ns::kTopico);
  // JSON array of {"spots": [...], "iri": "..."}.
  static TemporalRuleSet load(const std::filesystem::path& path);
  static TemporalRuleSet parse(std::string_view json);

  const std::vector<TemporalRule>& rules() const { return rules_; }
  bool is_target(std::string_view iri) const;

  const TemporalRule* find_variant(std::string_view lowercase_spot) const;
  const std::vector<std::size_t>& variant_lengths() const { return lengths_; }

 private:
  std::vector<TemporalRule> rules_;
  std::unordered_map<std::string, std::size_t> by_variant_;
  std::vector<std::size_t> lengths_;
  std::set<std::string, std::less<>> targets_;
};

struct TemporalMatch {
  std::string spot;
  Span span;
  std::string target_iri;
};

// Case-insensitive whole-word matches, longest variant first, scanning left
// to right without overlaps.
std::vector<TemporalMatch> match_temporal_rules(std::string_view text,
                                                const TemporalRuleSet& rules);

// ---------------------------------------------------------------------------
// Year references

enum class YearVerdict { kKeep, kDrop };

// Drops an annotation whose entity name carries a four digit year that the
// text does not mention.
YearVerdict apply_year_filter(const Annotation& annotation,
                              std::string_view text);

// ---------------------------------------------------------------------------
// Entity types

struct TypeRecord {
  std::string entity_iri;
  std::set<std::string> type_iris;

  bool operator==(const TypeRecord&) const = default;
};

using TypeMap = std::map<std::string, TypeRecord, std::less<>>;

// Local type database. File format: JSON object IRI -> [type IRI, ...].
class TypeDb {
 public:
  TypeDb() = default;
  explicit TypeDb(std::map<std::string, std::set<std::string>, std::less<>> types)
      : types_(std::move(types)) {}

  static TypeDb load(const std::filesystem::path& path);
  static TypeDb parse(std::string_view json);

  const std::set<std::string>* find(std::string_view iri) const;
  std::size_t size() const { return types_.size(); }

 private:
  std::map<std::string, std::set<std::string>, std::less<>> types_;
};

// A remote source of rdf:type statements, queried one chunk at a time.
class TypeSource {
 public:
  virtual ~TypeSource() = default;
  // Returns the types of every IRI in chunk that has any. Throws
  // RemoteUnavailable or MalformedResponse; never drops part of a chunk.
  virtual std::map<std::string, std::set<std::string>> fetch_types(
      std::span<const std::string> chunk) = 0;
};

// SPARQL endpoint client. Each chunk becomes one GET request with a
// "SELECT ?s ?t WHERE { VALUES ?s { ... } ?s a ?t }" query and a
// sparql-results+json answer. Answers are cached per query.
class SparqlTypeSource : public TypeSource {
 public:
  SparqlTypeSource(std::string endpoint, std::filesystem::path cache_dir,
                   int retries = 2);

  std::map<std::string, std::set<std::string>> fetch_types(
      std::span<const std::string> chunk) override;

  static std::string build_query(std::span<const std::string> chunk);
  std::size_t requests_issued() const { return requests_; }

 private:
  std::string endpoint_;
  std::unique_ptr<ResponseCache> cache_;
  int retries_;
  std::atomic<std::size_t> requests_{0};
};

inline constexpr std::size_t kTypeChunkSize = 50;

// Every input IRI appears in the result. IRIs known to the local database
// are answered locally; the rest go to remote in chunks of at most
// chunk_size, in sorted order. Without a remote source they get empty type
// sets.
TypeMap resolve_entity_types(const std::set<std::string>& iris,
                             const TypeDb* local, TypeSource* remote,
                             std::size_t chunk_size = kTypeChunkSize);

// ---------------------------------------------------------------------------
// Classification

struct TypeLists {
  std::set<std::string, std::less<>> person;
  std::set<std::string, std::less<>> location;

  // foaf:Person and dbo:Person; schema:Place, dbo:PopulatedPlace, dbo:Place,
  // dbo:Location, dbo:Settlement, geo:SpatialThing, umbel:PopulatedPlace.
  static TypeLists defaults();
};

// Fraction of the batch's posts in which one of the element's spots directly
// follows "in", "on" or "at".
double preposition_ratio(const std::vector<LinkedPost>& posts,
                         std::string_view entity_iri, std::size_t batch_size);

// Assigns one kind to every element of the batch, checking in order:
// temporal-rule origin, person type, location type together with a
// preposition ratio above tau_loc, and otherwise Other.
std::map<std::string, ElementKind> classify_elements(
    const std::vector<LinkedPost>& posts, std::size_t batch_size,
    const TypeMap& types, double tau_loc,
    const TypeLists& lists = TypeLists::defaults());

}  // namespace semtopic

#endif  // SEMTOPIC_SEMANTICS_H_
