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
#ifndef SEMTOPIC_COLLECTIVE_H_
#define SEMTOPIC_COLLECTIVE_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "semtopic/linked_post.h"

namespace semtopic {

// Link counts of one spot across a batch.
struct SpotLinks {
  std::string dominant;
  std::map<std::string, std::size_t> counts;  // entity IRI -> occurrences
};

// Spot -> entity statistics over every non-temporal link of the batch.
// The dominant entity has the highest count; ties go to the smallest IRI.
std::map<std::string, SpotLinks> spot_link_table(
    const std::vector<LinkedPost>& posts);

// Batch-level link consolidation:
//  1. every non-temporal occurrence of a spot is relinked to the spot's
//     dominant entity;
//  2. unlinked spots equal to a linked spot adopt its dominant entity;
//  3. all other unlinked spots are discarded.
// Temporal links are neither counted nor rewritten.
std::vector<LinkedPost> consolidate_links(std::vector<LinkedPost> posts);

}  // namespace semtopic

#endif  // SEMTOPIC_COLLECTIVE_H_
