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
#include "semtopic/linking.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "http_client.h"
#include "semtopic/errors.h"
#include "text_util.h"

namespace semtopic {
namespace {

using internal::ascii_lower;
using internal::is_word_byte;
using nlohmann::json;

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

// Byte offset of every UTF-16 code unit boundary of a UTF-8 string. Entry i
// is the byte where unit i starts; the last entry is text.size().
std::vector<std::size_t> utf16_to_byte_offsets(std::string_view text) {
  std::vector<std::size_t> offsets;
  offsets.reserve(text.size() + 1);
  std::size_t i = 0;
  while (i < text.size()) {
    auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = lead < 0x80 ? 1 : lead < 0xE0 ? 2 : lead < 0xF0 ? 3 : 4;
    len = std::min(len, text.size() - i);
    offsets.push_back(i);
    // Code points outside the BMP take two UTF-16 units.
    if (len == 4) offsets.push_back(i);
    i += len;
  }
  offsets.push_back(text.size());
  return offsets;
}

std::string title_to_iri(std::string_view title, std::string_view base) {
  std::string iri(base);
  for (char c : title) iri.push_back(c == ' ' ? '_' : c);
  return iri;
}

double number_field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end() || !it->is_number()) {
    throw MalformedResponse(fmt::format("annotation lacks numeric \"{}\"", name));
  }
  return it->get<double>();
}

}  // namespace

void LinkerConfig::validate() const {
  if (!in_unit_interval(tau_rho) || !in_unit_interval(tau_p)) {
    throw ConfigError("linker thresholds must lie in [0, 1]");
  }
  if (max_in_flight < 1) throw ConfigError("max_in_flight must be positive");
}

// --- DictionaryLinker ------------------------------------------------------

DictionaryLinker::DictionaryLinker(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  std::set<std::size_t, std::greater<>> lengths;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    Entry& entry = entries_[i];
    if (entry.spots.empty()) {
      throw InputError(fmt::format("dictionary entry {} has no spots", entry.iri));
    }
    if (entry.iri.empty()) throw InputError("dictionary entry without iri");
    if (!in_unit_interval(entry.rho) || !in_unit_interval(entry.p)) {
      throw InputError(
          fmt::format("dictionary entry {}: scores must lie in [0, 1]", entry.iri));
    }
    for (std::string& spot : entry.spots) {
      spot = ascii_lower(spot);
      if (spot.empty()) {
        throw InputError(fmt::format("dictionary entry {}: empty spot", entry.iri));
      }
      auto [it, inserted] = by_variant_.emplace(spot, i);
      if (!inserted && it->second != i) {
        throw InputError(fmt::format("spot \"{}\" maps to both {} and {}", spot,
                                     entries_[it->second].iri, entry.iri));
      }
      lengths.insert(spot.size());
    }
  }
  lengths_.assign(lengths.begin(), lengths.end());
}

DictionaryLinker DictionaryLinker::parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("dictionary: invalid JSON: {}", e.what()));
  }
  if (!doc.is_array()) throw InputError("dictionary: expected a JSON array");
  std::vector<Entry> entries;
  for (const json& item : doc) {
    try {
      Entry entry;
      entry.spots = item.at("spots").get<std::vector<std::string>>();
      entry.iri = item.at("iri").get<std::string>();
      entry.rho = item.at("rho").get<double>();
      entry.p = item.at("p").get<double>();
      entries.push_back(std::move(entry));
    } catch (const json::exception& e) {
      throw InputError(fmt::format("dictionary entry {}: {}", entries.size(),
                                   e.what()));
    }
  }
  return DictionaryLinker(std::move(entries));
}

DictionaryLinker DictionaryLinker::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open dictionary {}", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::vector<Annotation> DictionaryLinker::link(std::string_view text) {
  const std::string lower = ascii_lower(text);
  std::vector<Annotation> out;
  std::size_t i = 0;
  while (i < lower.size()) {
    const bool word_start =
        i == 0 || !is_word_byte(lower[i - 1]) || !is_word_byte(lower[i]);
    bool matched = false;
    if (word_start && !internal::is_space(lower[i])) {
      for (std::size_t len : lengths_) {
        if (len > lower.size() - i) continue;
        auto it = by_variant_.find(lower.substr(i, len));
        if (it == by_variant_.end()) continue;
        if (!internal::on_word_boundaries(lower, i, i + len)) continue;
        const Entry& entry = entries_[it->second];
        out.push_back(Annotation{it->first, Span{i, i + len}, entry.iri,
                                 entry.rho, entry.p});
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  return out;
}

// --- Remote linker ---------------------------------------------------------

std::vector<Annotation> parse_linker_response(std::string_view body,
                                              std::string_view text,
                                              std::string_view resource_base) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw MalformedResponse(fmt::format("linker response is not JSON: {}", e.what()));
  }
  auto it = doc.find("annotations");
  if (!doc.is_object() || it == doc.end() || !it->is_array()) {
    throw MalformedResponse("linker response lacks an \"annotations\" array");
  }
  const auto offsets = utf16_to_byte_offsets(text);
  const std::size_t units = offsets.size() - 1;
  std::vector<Annotation> out;
  for (const json& item : *it) {
    if (!item.is_object()) throw MalformedResponse("annotation is not an object");
    auto title = item.find("title");
    // Spots without a resolved entity carry no title; they are not links.
    if (title == item.end()) continue;
    if (!title->is_string()) throw MalformedResponse("annotation title not a string");
    const double start = number_field(item, "start");
    const double end = number_field(item, "end");
    const double rho = number_field(item, "rho");
    const double p = number_field(item, "link_probability");
    if (start < 0 || end <= start || end > static_cast<double>(units)) {
      throw MalformedResponse(
          fmt::format("annotation span [{}, {}) outside the text", start, end));
    }
    if (!in_unit_interval(rho) || !in_unit_interval(p)) {
      throw MalformedResponse("annotation scores outside [0, 1]");
    }
    Span span{offsets[static_cast<std::size_t>(start)],
              offsets[static_cast<std::size_t>(end)]};
    out.push_back(Annotation{ascii_lower(text.substr(span.begin, span.length())),
                             span,
                             title_to_iri(title->get<std::string>(), resource_base),
                             rho, p});
  }
  return out;
}

RemoteLinker::RemoteLinker(LinkerConfig config)
    : config_(std::move(config)),
      in_flight_(std::clamp(config_.max_in_flight, 1, 64)) {
  config_.validate();
  if (config_.endpoint.empty()) throw ConfigError("remote linker needs an endpoint");
  if (!config_.cache_dir.empty()) {
    cache_ = std::make_unique<ResponseCache>(config_.cache_dir / "linker");
  }
}

std::string RemoteLinker::fetch(std::string_view text) {
  internal::QueryParams params{{"text", std::string(text)},
                               {"lang", config_.lang}};
  if (!config_.token.empty()) params.emplace_back("gcube-token", config_.token);
  in_flight_.acquire();
  struct Release {
    std::counting_semaphore<64>& s;
    ~Release() { s.release(); }
  } release{in_flight_};
  ++requests_;
  return internal::http_get(config_.endpoint, params, config_.retries);
}

std::vector<Annotation> RemoteLinker::link(std::string_view text) {
  std::string body;
  if (cache_) {
    const std::string key = ResponseCache::digest(
        fmt::format("linker\n{}\n{}\n{}", config_.endpoint, config_.lang, text));
    // A cached body that no longer parses is refetched and overwritten.
    body = cache_->lookup_or_fetch(key, [&] { return fetch(text); });
    try {
      return parse_linker_response(body, text, config_.resource_base);
    } catch (const MalformedResponse&) {
      body = fetch(text);
      auto parsed = parse_linker_response(body, text, config_.resource_base);
      cache_->store(key, body);
      return parsed;
    }
  }
  body = fetch(text);
  return parse_linker_response(body, text, config_.resource_base);
}

// --- Filtering -------------------------------------------------------------

LinkOutcome filter_annotations(std::vector<Annotation> raw,
                               const LinkerConfig& config) {
  for (Annotation& a : raw) a.spot = ascii_lower(a.spot);
  std::erase_if(raw, [](const Annotation& a) { return a.span.empty(); });

  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const Annotation& a = raw[x];
    const Annotation& b = raw[y];
    if (a.rho != b.rho) return a.rho > b.rho;
    if (a.span != b.span) return a.span < b.span;
    return a.entity_iri < b.entity_iri;
  });
  std::vector<const Annotation*> kept;
  for (std::size_t idx : order) {
    const Annotation& a = raw[idx];
    bool clash = std::any_of(kept.begin(), kept.end(), [&](const Annotation* k) {
      return k->span.overlaps(a.span);
    });
    if (!clash) kept.push_back(&a);
  }

  LinkOutcome outcome;
  for (const Annotation* a : kept) {
    if (a->rho > config.tau_rho && a->link_prob > config.tau_p) {
      outcome.accepted.push_back(*a);
    } else {
      outcome.rejected.push_back(*a);
    }
  }
  auto by_span = [](const Annotation& a, const Annotation& b) {
    if (a.span != b.span) return a.span < b.span;
    return a.entity_iri < b.entity_iri;
  };
  std::sort(outcome.accepted.begin(), outcome.accepted.end(), by_span);
  std::sort(outcome.rejected.begin(), outcome.rejected.end(), by_span);
  return outcome;
}

std::vector<Annotation> annotate_post(std::string_view text, EntityLinker& linker,
                                      const LinkerConfig& config) {
  if (text.empty()) return {};
  return filter_annotations(linker.link(text), config).accepted;
}

}  // namespace semtopic
