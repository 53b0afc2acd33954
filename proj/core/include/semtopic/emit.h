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
#ifndef SEMTOPIC_EMIT_H_
#define SEMTOPIC_EMIT_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semtopic/cliques.h"
#include "semtopic/corpus.h"
#include "semtopic/semantics.h"
#include "semtopic/time.h"
#include "semtopic/vocab.h"

namespace semtopic {

inline constexpr std::string_view kDefaultTopicBase =
    "http://example.org/semtopic";
inline constexpr std::string_view kDefaultMaker =
    "http://example.org/semtopic/agent/pipeline";

struct TopicElement {
  std::string iri;
  ElementKind kind = ElementKind::kOther;

  bool operator==(const TopicElement&) const = default;
};

struct Topic {
  std::string id;
  std::vector<TopicElement> elements;  // sorted by IRI
  Timestamp interval_start;
  Timestamp interval_end;
  Timestamp created_at;
  std::string maker;
  TopicProvenance provenance;
};

// One Topic per element set, numbered 1.. in set order under
// "{topic_base}/topic/{batch start, compact}/{ordinal}". The observation
// interval spans the earliest and latest post of the batch; when they
// coincide the end is moved one second later. Throws std::logic_error when
// an element has no kind.
std::vector<Topic> instantiate_topics(
    const TopicSet& topics, const std::map<std::string, ElementKind>& kinds,
    const IntervalBatch& batch, Timestamp now, std::string_view maker,
    std::string_view topic_base = kDefaultTopicBase);

// Turtle document with prefixes for the topic vocabulary, time, foaf, xsd
// and dbr. Per topic: a type triple, one triple per element, the observation
// interval with its beginning and end instants, the creation time and the
// maker. Topics are written in id order.
std::string serialize_turtle(const std::vector<Topic>& topics,
                             const TopicoVocab& vocab);

// Lossless JSON form, including provenance.
std::string serialize_json(const std::vector<Topic>& topics);
// Inverse of serialize_json. Throws InputError.
std::vector<Topic> parse_topics_json(std::string_view json);

// <IRIREF> form of an IRI with the characters Turtle forbids escaped as
// \uXXXX.
std::string turtle_iri(std::string_view iri);

// Orders topic ids by their prefix and then by the numeric ordinal after the
// last '/'.
bool topic_id_less(std::string_view a, std::string_view b);

}  // namespace semtopic

#endif  // SEMTOPIC_EMIT_H_
