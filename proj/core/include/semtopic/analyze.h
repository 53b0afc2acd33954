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
#ifndef SEMTOPIC_ANALYZE_H_
#define SEMTOPIC_ANALYZE_H_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "semtopic/emit.h"
#include "semtopic/time.h"

namespace semtopic {

struct Interval {
  Timestamp start;
  Timestamp end;

  auto operator<=>(const Interval&) const = default;
};

// Read-only view over emitted topics.
class TopicIndex {
 public:
  explicit TopicIndex(std::vector<Topic> topics);

  // Loads JSON topic documents. A directory is scanned recursively for
  // *.json files, in path order.
  static TopicIndex load(const std::vector<std::filesystem::path>& paths);

  const std::vector<Topic>& topics() const { return topics_; }
  // Indices of topics containing iri, ascending.
  const std::vector<std::size_t>& topics_with(std::string_view iri) const;
  const std::map<Interval, std::vector<std::size_t>>& by_interval() const {
    return by_interval_;
  }

 private:
  std::vector<Topic> topics_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> inverted_;
  std::map<Interval, std::vector<std::size_t>> by_interval_;
};

struct PersonCount {
  std::string person;
  std::size_t topics = 0;

  bool operator==(const PersonCount&) const = default;
};

// Persons sharing a topic with anchor, where both are person elements.
// Sorted by descending count, then IRI.
std::vector<PersonCount> co_persons(const TopicIndex& index,
                                    std::string_view anchor);

// Distinct observation intervals of topics containing any target, sorted.
std::vector<Interval> intervals_with(const TopicIndex& index,
                                     const std::set<std::string>& targets);

struct TimelineRow {
  Interval interval;
  std::string element;
  std::vector<std::string> persons;  // subset of the query persons, sorted
};

// Restricts to topics with a person element in persons, keeps the top_k
// isAbout elements by topic count (ties: IRI) and reports, per interval and
// element, which of the persons it appeared with.
std::vector<TimelineRow> element_timeline(const TopicIndex& index,
                                          const std::set<std::string>& persons,
                                          std::size_t top_k);

// CSV with header "interval_start,interval_end,element,persons,attribution".
// persons is ';'-joined; attribution is "all" when every query person is
// present and "only" otherwise.
void write_timeline_csv(std::ostream& out, const std::vector<TimelineRow>& rows,
                        const std::set<std::string>& persons);

}  // namespace semtopic

#endif  // SEMTOPIC_ANALYZE_H_
