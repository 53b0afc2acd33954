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
#ifndef SEMTOPIC_LINKED_POST_H_
#define SEMTOPIC_LINKED_POST_H_

#include <string>
#include <string_view>
#include <vector>

#include "semtopic/span.h"

namespace semtopic {

enum class LinkOrigin {
  kLinker,    // accepted entity-linker annotation
  kMention,   // expanded user handle
  kTemporal,  // temporal rule match
  kPromoted,  // unlinked spot adopted during consolidation
};

std::string_view to_string(LinkOrigin origin);

// One occurrence of a spot bound to an entity.
struct Link {
  std::string spot;
  Span span;
  std::string entity_iri;
  LinkOrigin origin = LinkOrigin::kLinker;

  bool operator==(const Link&) const = default;
};

struct UnlinkedSpot {
  std::string spot;
  Span span;

  bool operator==(const UnlinkedSpot&) const = default;
};

// A post with its candidate elements. text is the fully processed text the
// spans refer to (preprocessed, mentions expanded).
struct LinkedPost {
  std::string post_id;
  std::string text;
  std::vector<Link> links;  // sorted by span
  std::vector<UnlinkedSpot> unlinked;

  // Distinct entity IRIs of the post, sorted.
  std::vector<std::string> elements() const;

  bool operator==(const LinkedPost&) const = default;
};

}  // namespace semtopic

#endif  // SEMTOPIC_LINKED_POST_H_
