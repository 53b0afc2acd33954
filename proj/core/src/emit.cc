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
#include "semtopic/emit.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "semtopic/errors.h"

namespace semtopic {
namespace {

using nlohmann::json;

bool local_name_ok(std::string_view local) {
  if (local.empty()) return false;
  return std::all_of(local.begin(), local.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-';
  }) && local.front() != '-';
}

class PrefixTable {
 public:
  explicit PrefixTable(const TopicoVocab& vocab) {
    prefixes_ = {{"topico", vocab.base()},
                 {"time", std::string(ns::kTime)},
                 {"greg", std::string(ns::kGreg)},
                 {"foaf", std::string(ns::kFoaf)},
                 {"xsd", std::string(ns::kXsd)},
                 {"dbr", std::string(ns::kDbr)}};
  }

  void write_header(std::string& out) const {
    for (const auto& [name, iri] : prefixes_) {
      out += fmt::format("@prefix {}: {} .\n", name, turtle_iri(iri));
    }
  }

  std::string term(std::string_view iri) const {
    for (const auto& [name, base] : prefixes_) {
      if (iri.size() > base.size() && iri.substr(0, base.size()) == base &&
          local_name_ok(iri.substr(base.size()))) {
        return name + ":" + std::string(iri.substr(base.size()));
      }
    }
    return turtle_iri(iri);
  }

 private:
  std::vector<std::pair<std::string, std::string>> prefixes_;
};

std::string datetime_literal(Timestamp t) {
  return fmt::format("\"{}\"^^xsd:dateTime", format_rfc3339(t));
}

std::pair<std::string_view, std::string_view> split_ordinal(std::string_view id) {
  auto cut = id.rfind('/');
  if (cut == std::string_view::npos) return {std::string_view{}, id};
  return {id.substr(0, cut), id.substr(cut + 1)};
}

std::vector<const Topic*> ordered(const std::vector<Topic>& topics) {
  std::vector<const Topic*> out;
  for (const Topic& t : topics) out.push_back(&t);
  std::sort(out.begin(), out.end(), [](const Topic* a, const Topic* b) {
    return topic_id_less(a->id, b->id);
  });
  return out;
}

json to_json(const Topic& topic) {
  json elements = json::array();
  json kinds = json::array();
  for (const TopicElement& e : topic.elements) {
    elements.push_back(e.iri);
    kinds.push_back(std::string(to_string(e.kind)));
  }
  json prov_elements = json::object();
  for (const auto& [iri, ep] : topic.provenance.elements) {
    prov_elements[iri] = {{"post_count", ep.post_count},
                          {"freq", ep.freq},
                          {"post_ids", ep.post_ids}};
  }
  return json{{"id", topic.id},
              {"elements", std::move(elements)},
              {"kinds", std::move(kinds)},
              {"interval",
               {{"start", format_rfc3339(topic.interval_start)},
                {"end", format_rfc3339(topic.interval_end)}}},
              {"created_at", format_rfc3339(topic.created_at)},
              {"maker", topic.maker},
              {"provenance",
               {{"post_ids", topic.provenance.post_ids},
                {"elements", std::move(prov_elements)}}}};
}

Topic from_json(const json& obj) {
  Topic topic;
  topic.id = obj.at("id").get<std::string>();
  const auto elements = obj.at("elements").get<std::vector<std::string>>();
  const auto kinds = obj.at("kinds").get<std::vector<std::string>>();
  if (elements.size() != kinds.size()) {
    throw InputError(fmt::format("topic {}: elements and kinds differ in length", topic.id));
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    topic.elements.push_back(TopicElement{elements[i], parse_element_kind(kinds[i])});
  }
  topic.interval_start = parse_rfc3339(obj.at("interval").at("start").get<std::string>());
  topic.interval_end = parse_rfc3339(obj.at("interval").at("end").get<std::string>());
  topic.created_at = parse_rfc3339(obj.at("created_at").get<std::string>());
  topic.maker = obj.at("maker").get<std::string>();
  if (auto prov = obj.find("provenance"); prov != obj.end()) {
    topic.provenance.post_ids = prov->at("post_ids").get<std::vector<std::string>>();
    for (const auto& [iri, ep] : prov->at("elements").items()) {
      topic.provenance.elements[iri] =
          ElementProvenance{ep.at("post_count").get<std::size_t>(),
                            ep.at("freq").get<double>(),
                            ep.at("post_ids").get<std::vector<std::string>>()};
    }
  }
  return topic;
}

}  // namespace

std::string turtle_iri(std::string_view iri) {
  std::string out = "<";
  for (char c : iri) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' ||
        c == '|' || c == '^' || c == '`' || c == '\\') {
      out += fmt::format("\\u{:04X}", u);
    } else {
      out.push_back(c);
    }
  }
  out.push_back('>');
  return out;
}

bool topic_id_less(std::string_view a, std::string_view b) {
  auto [prefix_a, ord_a] = split_ordinal(a);
  auto [prefix_b, ord_b] = split_ordinal(b);
  if (prefix_a != prefix_b) return prefix_a < prefix_b;
  unsigned long long na = 0;
  unsigned long long nb = 0;
  auto ra = std::from_chars(ord_a.data(), ord_a.data() + ord_a.size(), na);
  auto rb = std::from_chars(ord_b.data(), ord_b.data() + ord_b.size(), nb);
  const bool numeric_a = ra.ec == std::errc() && ra.ptr == ord_a.data() + ord_a.size();
  const bool numeric_b = rb.ec == std::errc() && rb.ptr == ord_b.data() + ord_b.size();
  if (numeric_a && numeric_b && na != nb) return na < nb;
  return ord_a < ord_b;
}

std::vector<Topic> instantiate_topics(const TopicSet& topics,
                                      const std::map<std::string, ElementKind>& kinds,
                                      const IntervalBatch& batch, Timestamp now,
                                      std::string_view maker,
                                      std::string_view topic_base) {
  std::vector<Topic> out;
  if (topics.topics.empty()) return out;

  Timestamp first = batch.start;
  Timestamp last = batch.end;
  if (!batch.posts.empty()) {
    auto [lo, hi] = std::minmax_element(
        batch.posts.begin(), batch.posts.end(),
        [](const Post& a, const Post& b) { return a.created_at < b.created_at; });
    first = lo->created_at;
    last = hi->created_at;
  }
  if (last <= first) last = first + std::chrono::seconds{1};

  const std::string prefix =
      fmt::format("{}/topic/{}/", topic_base, format_compact(batch.start));
  for (std::size_t i = 0; i < topics.topics.size(); ++i) {
    Topic topic;
    topic.id = prefix + std::to_string(i + 1);
    for (const std::string& iri : topics.topics[i]) {
      auto it = kinds.find(iri);
      if (it == kinds.end()) {
        throw std::logic_error(fmt::format("element {} has no kind", iri));
      }
      topic.elements.push_back(TopicElement{iri, it->second});
    }
    std::sort(topic.elements.begin(), topic.elements.end(),
              [](const TopicElement& a, const TopicElement& b) { return a.iri < b.iri; });
    topic.interval_start = first;
    topic.interval_end = last;
    topic.created_at = now;
    topic.maker = std::string(maker);
    if (i < topics.provenance.size()) topic.provenance = topics.provenance[i];
    out.push_back(std::move(topic));
  }
  return out;
}

std::string serialize_turtle(const std::vector<Topic>& topics,
                             const TopicoVocab& vocab) {
  const PrefixTable prefixes(vocab);
  std::string out;
  prefixes.write_header(out);
  for (const Topic* topic : ordered(topics)) {
    const std::string subject = turtle_iri(topic->id);
    const std::string interval = turtle_iri(topic->id + "#interval");
    const std::string begin = turtle_iri(topic->id + "#begin");
    const std::string end = turtle_iri(topic->id + "#end");

    out += fmt::format("\n{} a {} ;\n", subject, prefixes.term(vocab.topic_class()));
    for (const TopicElement& e : topic->elements) {
      out += fmt::format("    {} {} ;\n", prefixes.term(vocab.property_for(e.kind)),
                         prefixes.term(e.iri));
    }
    out += fmt::format("    {} {} ;\n", prefixes.term(vocab.observation_interval()),
                       interval);
    out += fmt::format("    {} {} ;\n", prefixes.term(vocab.topic_created_at()),
                       datetime_literal(topic->created_at));
    out += fmt::format("    {} {} .\n", prefixes.term(TopicoVocab::maker()),
                       prefixes.term(topic->maker));
    out += fmt::format("{} time:hasBeginning {} ;\n    time:hasEnd {} .\n", interval,
                       begin, end);
    out += fmt::format("{} time:inXSDDateTime {} .\n", begin,
                       datetime_literal(topic->interval_start));
    out += fmt::format("{} time:inXSDDateTime {} .\n", end,
                       datetime_literal(topic->interval_end));
  }
  return out;
}

std::string serialize_json(const std::vector<Topic>& topics) {
  json list = json::array();
  for (const Topic* topic : ordered(topics)) list.push_back(to_json(*topic));
  json doc{{"format", "semtopic-topics/1"}, {"topics", std::move(list)}};
  return doc.dump(2) + "\n";
}

std::vector<Topic> parse_topics_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("topics: invalid JSON: {}", e.what()));
  }
  const json* list = &doc;
  if (doc.is_object()) {
    auto it = doc.find("topics");
    if (it == doc.end()) throw InputError("topics: missing \"topics\" array");
    list = &*it;
  }
  if (!list->is_array()) throw InputError("topics: expected an array");
  std::vector<Topic> out;
  for (const json& item : *list) {
    try {
      out.push_back(from_json(item));
    } catch (const json::exception& e) {
      throw InputError(fmt::format("topic {}: {}", out.size(), e.what()));
    } catch (const std::invalid_argument& e) {
      throw InputError(fmt::format("topic {}: {}", out.size(), e.what()));
    }
  }
  return out;
}

}  // namespace semtopic
