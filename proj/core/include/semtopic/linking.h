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
#ifndef SEMTOPIC_LINKING_H_
#define SEMTOPIC_LINKING_H_

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <semaphore>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semtopic/cache.h"
#include "semtopic/span.h"

namespace semtopic {

// A spot in a post linked to a knowledge-base entity.
struct Annotation {
  std::string spot;  // lowercase surface form
  Span span;         // byte offsets into the text that was linked
  std::string entity_iri;
  double rho = 0.0;        // goodness of the spot
  double link_prob = 0.0;  // probability of the link

  bool operator==(const Annotation&) const = default;
};

struct LinkerConfig {
  double tau_rho = 0.15;
  double tau_p = 0.35;
  std::string endpoint;
  std::string token;
  std::string lang = "en";
  // Wikipedia titles become entity IRIs under this base.
  std::string resource_base = "http://dbpedia.org/resource/";
  std::filesystem::path cache_dir;
  int max_in_flight = 4;
  int retries = 2;

  // Throws ConfigError when a threshold is outside [0, 1].
  void validate() const;
};

// Produces the raw candidate annotations for a text, before any threshold is
// applied. Implementations must be safe to call from several threads.
class EntityLinker {
 public:
  virtual ~EntityLinker() = default;
  virtual std::vector<Annotation> link(std::string_view text) = 0;
};

// Longest-match linker over a fixed dictionary. Each entry maps a set of
// lowercase spot variants to one entity with fixed scores. Matching is
// case-insensitive and restricted to whole words.
class DictionaryLinker : public EntityLinker {
 public:
  struct Entry {
    std::vector<std::string> spots;
    std::string iri;
    double rho = 0.0;
    double p = 0.0;
  };

  // Throws InputError when a variant appears in two entries or an entry has
  // no variants.
  explicit DictionaryLinker(std::vector<Entry> entries);

  // File format: JSON array of {"spots": [...], "iri": "...", "rho": r, "p": p}.
  static DictionaryLinker load(const std::filesystem::path& path);
  static DictionaryLinker parse(std::string_view json);

  std::vector<Annotation> link(std::string_view text) override;

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> by_variant_;
  std::vector<std::size_t> lengths_;  // distinct variant lengths, descending
};

// Client for a TagMe-style HTTP annotation service. Requests are
// "GET {endpoint}?text=...&lang=...&gcube-token=..." and the response is
//   {"annotations": [{"spot", "start", "end", "rho", "link_probability",
//                     "title"}, ...]}
// with start/end counted in UTF-16 code units. Responses are cached verbatim
// when cache_dir is set.
class RemoteLinker : public EntityLinker {
 public:
  explicit RemoteLinker(LinkerConfig config);

  std::vector<Annotation> link(std::string_view text) override;

  // Number of HTTP requests actually issued (cache hits excluded).
  std::size_t requests_issued() const { return requests_; }

 private:
  std::string fetch(std::string_view text);

  LinkerConfig config_;
  std::unique_ptr<ResponseCache> cache_;
  std::counting_semaphore<64> in_flight_;
  std::atomic<std::size_t> requests_{0};
};

// Parses a TagMe-style response for the given text. Titles are mapped to
// IRIs by replacing spaces with underscores under resource_base. Throws
// MalformedResponse.
std::vector<Annotation> parse_linker_response(std::string_view json,
                                              std::string_view text,
                                              std::string_view resource_base);

// Annotations that passed and failed the confidence thresholds.
struct LinkOutcome {
  std::vector<Annotation> accepted;
  std::vector<Annotation> rejected;
};

// Lowercases spots, resolves overlapping spots in favour of the higher rho
// (ties: earlier start, then smaller IRI) and splits the survivors on
// rho > tau_rho && link_prob > tau_p. Overlaps are resolved before the
// thresholds are applied so that raising a threshold can only remove
// annotations. Both lists are sorted by span start.
LinkOutcome filter_annotations(std::vector<Annotation> raw,
                               const LinkerConfig& config);

// The accepted half of filter_annotations(linker.link(text), config).
std::vector<Annotation> annotate_post(std::string_view text,
                                      EntityLinker& linker,
                                      const LinkerConfig& config);

}  // namespace semtopic

#endif  // SEMTOPIC_LINKING_H_
