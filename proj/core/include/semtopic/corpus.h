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

#ifndef SEMTOPIC_CORPUS_H_
#define SEMTOPIC_CORPUS_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semtopic/time.h"

namespace semtopic {

struct Post {
  std::string id;
  std::string text;
  Timestamp created_at;
  std::optional<std::string> author;
};

using Corpus = std::vector<Post>;

// Posts falling in the half-open window [start, end).
struct IntervalBatch {
  Timestamp start;
  Timestamp end;
  std::vector<Post> posts;

  std::size_t size() const { return posts.size(); }
};

// Reads a JSON-lines corpus, one post object per line:
//   {"id": "...", "text": "...", "created_at": "<RFC 3339>", "author": "..."}
// "author" is optional. Blank lines are skipped. Throws InputError naming
// the offending line for malformed lines or duplicate ids.
Corpus load_posts(const std::filesystem::path& path);
Corpus parse_posts(std::istream& in);

// Splits the corpus into consecutive windows of interval_minutes, aligned to
// the earliest timestamp truncated to the minute. Windows between the first
// and last post are emitted even when empty. Post order inside a window
// follows corpus order.
std::vector<IntervalBatch> partition_intervals(const Corpus& corpus,
                                               int interval_minutes);

// Drops URLs and leading "RT " markers, strips '#' from hashtags, collapses
// whitespace and trims. '@' mentions are kept. Idempotent.
std::string preprocess_text(std::string_view text);

}  // namespace semtopic

#endif  // SEMTOPIC_CORPUS_H_
