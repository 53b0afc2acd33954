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
#include "semtopic/collective.h"

#include <algorithm>

namespace semtopic {

std::map<std::string, SpotLinks> spot_link_table(
    const std::vector<LinkedPost>& posts) {
  std::map<std::string, SpotLinks> table;
  for (const LinkedPost& post : posts) {
    for (const Link& link : post.links) {
      if (link.origin == LinkOrigin::kTemporal) continue;
      ++table[link.spot].counts[link.entity_iri];
    }
  }
  for (auto& [spot, links] : table) {
    std::size_t best = 0;
    // counts is ordered by IRI, so the first maximum is the smallest IRI.
    for (const auto& [iri, count] : links.counts) {
      if (count > best) {
        best = count;
        links.dominant = iri;
      }
    }
  }
  return table;
}

std::vector<LinkedPost> consolidate_links(std::vector<LinkedPost> posts) {
  const auto table = spot_link_table(posts);
  for (LinkedPost& post : posts) {
    for (Link& link : post.links) {
      if (link.origin == LinkOrigin::kTemporal) continue;
      link.entity_iri = table.at(link.spot).dominant;
    }
    for (const UnlinkedSpot& spot : post.unlinked) {
      auto it = table.find(spot.spot);
      if (it == table.end()) continue;
      bool taken = std::any_of(post.links.begin(), post.links.end(),
                               [&](const Link& l) { return l.span.overlaps(spot.span); });
      if (taken) continue;
      post.links.push_back(
          Link{spot.spot, spot.span, it->second.dominant, LinkOrigin::kPromoted});
    }
    post.unlinked.clear();
    std::sort(post.links.begin(), post.links.end(), [](const Link& a, const Link& b) {
      if (a.span != b.span) return a.span < b.span;
      return a.entity_iri < b.entity_iri;
    });
  }
  return posts;
}

}  // namespace semtopic
