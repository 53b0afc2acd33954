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
#include "semtopic/linked_post.h"

#include <algorithm>

namespace semtopic {

std::string_view to_string(LinkOrigin origin) {
  switch (origin) {
    case LinkOrigin::kLinker:
      return "linker";
    case LinkOrigin::kMention:
      return "mention";
    case LinkOrigin::kTemporal:
      return "temporal";
    case LinkOrigin::kPromoted:
      return "promoted";
  }
  return "unknown";
}

std::vector<std::string> LinkedPost::elements() const {
  std::vector<std::string> out;
  out.reserve(links.size());
  for (const Link& link : links) out.push_back(link.entity_iri);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace semtopic
