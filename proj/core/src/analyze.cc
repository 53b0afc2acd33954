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
#include "semtopic/analyze.h"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "semtopic/errors.h"

namespace semtopic {
namespace {

const std::vector<std::size_t> kNoTopics;

bool has_person(const Topic& topic, std::string_view iri) {
  return std::any_of(topic.elements.begin(), topic.elements.end(),
                     [&](const TopicElement& e) {
                       return e.kind == ElementKind::kPerson && e.iri == iri;
                     });
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open {}", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TopicIndex::TopicIndex(std::vector<Topic> topics) : topics_(std::move(topics)) {
  for (std::size_t i = 0; i < topics_.size(); ++i) {
    const Topic& t = topics_[i];
    for (const TopicElement& e : t.elements) {
      auto& list = inverted_[e.iri];
      if (list.empty() || list.back() != i) list.push_back(i);
    }
    by_interval_[Interval{t.interval_start, t.interval_end}].push_back(i);
  }
}

TopicIndex TopicIndex::load(const std::vector<std::filesystem::path>& paths) {
  std::vector<std::filesystem::path> files;
  for (const auto& path : paths) {
    if (std::filesystem::is_directory(path)) {
      std::vector<std::filesystem::path> found;
      for (const auto& entry : std::filesystem::recursive_directory_iterator(path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(path);
    }
  }
  std::vector<Topic> topics;
  for (const auto& file : files) {
    auto loaded = parse_topics_json(read_file(file));
    std::move(loaded.begin(), loaded.end(), std::back_inserter(topics));
  }
  return TopicIndex(std::move(topics));
}

const std::vector<std::size_t>& TopicIndex::topics_with(std::string_view iri) const {
  auto it = inverted_.find(iri);
  return it == inverted_.end() ? kNoTopics : it->second;
}

std::vector<PersonCount> co_persons(const TopicIndex& index, std::string_view anchor) {
  std::map<std::string, std::size_t> counts;
  for (std::size_t i : index.topics_with(anchor)) {
    const Topic& topic = index.topics()[i];
    if (!has_person(topic, anchor)) continue;
    std::set<std::string_view> seen;
    for (const TopicElement& e : topic.elements) {
      if (e.kind != ElementKind::kPerson || e.iri == anchor) continue;
      if (seen.insert(e.iri).second) ++counts[e.iri];
    }
  }
  std::vector<PersonCount> out;
  for (auto& [person, n] : counts) out.push_back(PersonCount{person, n});
  std::stable_sort(out.begin(), out.end(), [](const PersonCount& a, const PersonCount& b) {
    return a.topics > b.topics;
  });
  return out;
}

std::vector<Interval> intervals_with(const TopicIndex& index,
                                     const std::set<std::string>& targets) {
  std::set<Interval> found;
  for (const std::string& target : targets) {
    for (std::size_t i : index.topics_with(target)) {
      const Topic& t = index.topics()[i];
      found.insert(Interval{t.interval_start, t.interval_end});
    }
  }
  return {found.begin(), found.end()};
}

std::vector<TimelineRow> element_timeline(const TopicIndex& index,
                                          const std::set<std::string>& persons,
                                          std::size_t top_k) {
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < index.topics().size(); ++i) {
    const Topic& t = index.topics()[i];
    if (std::any_of(persons.begin(), persons.end(),
                    [&](const std::string& p) { return has_person(t, p); })) {
      selected.push_back(i);
    }
  }

  std::map<std::string, std::size_t> counts;
  for (std::size_t i : selected) {
    for (const TopicElement& e : index.topics()[i].elements) {
      if (e.kind == ElementKind::kOther) ++counts[e.iri];
    }
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > top_k) ranked.resize(top_k);
  std::set<std::string> top;
  for (const auto& entry : ranked) top.insert(entry.first);

  std::map<std::pair<Interval, std::string>, std::set<std::string>> cells;
  for (std::size_t i : selected) {
    const Topic& t = index.topics()[i];
    const Interval interval{t.interval_start, t.interval_end};
    for (const TopicElement& e : t.elements) {
      if (e.kind != ElementKind::kOther || !top.count(e.iri)) continue;
      auto& present = cells[{interval, e.iri}];
      for (const std::string& p : persons) {
        if (has_person(t, p)) present.insert(p);
      }
    }
  }

  std::vector<TimelineRow> rows;
  for (auto& [key, present] : cells) {
    rows.push_back(TimelineRow{key.first, key.second, {present.begin(), present.end()}});
  }
  return rows;
}

void write_timeline_csv(std::ostream& out, const std::vector<TimelineRow>& rows,
                        const std::set<std::string>& persons) {
  auto quote = [](std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
    std::string q = "\"";
    for (char c : field) {
      if (c == '"') q += "\"\"";
      else q.push_back(c);
    }
    return q + "\"";
  };
  out << "interval_start,interval_end,element,persons,attribution\n";
  for (const TimelineRow& row : rows) {
    std::string joined;
    for (const std::string& p : row.persons) {
      if (!joined.empty()) joined.push_back(';');
      joined += p;
    }
    const bool all = row.persons.size() == persons.size();
    out << format_rfc3339(row.interval.start) << ',' << format_rfc3339(row.interval.end)
        << ',' << quote(row.element) << ',' << quote(joined) << ','
        << (all ? "all" : "only") << '\n';
  }
}

}  // namespace semtopic
