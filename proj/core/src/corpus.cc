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
#include "semtopic/corpus.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "semtopic/errors.h"
#include "text_util.h"

namespace semtopic {
namespace {

using internal::is_space;

const std::string& require_string(const nlohmann::json& obj, const char* field,
                                  std::size_t line) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw InputError(fmt::format("line {}: missing \"{}\" field", line, field),
                     line);
  }
  if (!it->is_string()) {
    throw InputError(fmt::format("line {}: \"{}\" must be a string", line, field),
                     line);
  }
  return it->get_ref<const std::string&>();
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return is_space(c); });
}

bool starts_with_icase(std::string_view text, std::size_t pos,
                       std::string_view prefix) {
  if (pos + prefix.size() > text.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (internal::ascii_lower(text[pos + i]) != prefix[i]) return false;
  }
  return true;
}

bool url_at(std::string_view text, std::size_t pos) {
  if (pos > 0 && internal::is_ascii_alnum(text[pos - 1])) return false;
  return starts_with_icase(text, pos, "http://") ||
         starts_with_icase(text, pos, "https://") ||
         starts_with_icase(text, pos, "www.");
}

}  // namespace

Corpus parse_posts(std::istream& in) {
  Corpus corpus;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(fmt::format("line {}: invalid JSON: {}", line_no, e.what()),
                       line_no);
    }
    if (!obj.is_object()) {
      throw InputError(fmt::format("line {}: expected a JSON object", line_no),
                       line_no);
    }
    Post post;
    post.id = require_string(obj, "id", line_no);
    if (post.id.empty()) {
      throw InputError(fmt::format("line {}: empty id", line_no), line_no);
    }
    post.text = require_string(obj, "text", line_no);
    const std::string& created = require_string(obj, "created_at", line_no);
    try {
      post.created_at = parse_rfc3339(created);
    } catch (const std::invalid_argument& e) {
      throw InputError(fmt::format("line {}: bad created_at \"{}\": {}", line_no,
                                   created, e.what()),
                       line_no);
    }
    if (auto it = obj.find("author"); it != obj.end() && !it->is_null()) {
      if (!it->is_string()) {
        throw InputError(
            fmt::format("line {}: \"author\" must be a string", line_no), line_no);
      }
      post.author = it->get<std::string>();
    }
    if (!seen.insert(post.id).second) {
      throw InputError(
          fmt::format("line {}: duplicate post id \"{}\"", line_no, post.id),
          line_no);
    }
    corpus.push_back(std::move(post));
  }
  if (in.bad()) throw InputError("read error");
  return corpus;
}

Corpus load_posts(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(fmt::format("cannot open corpus {}", path.string()));
  }
  return parse_posts(in);
}

std::vector<IntervalBatch> partition_intervals(const Corpus& corpus,
                                               int interval_minutes) {
  using namespace std::chrono;
  if (interval_minutes < 1) {
    throw std::invalid_argument("interval_minutes must be at least 1");
  }
  std::vector<IntervalBatch> batches;
  if (corpus.empty()) return batches;

  auto [lo, hi] = std::minmax_element(
      corpus.begin(), corpus.end(),
      [](const Post& a, const Post& b) { return a.created_at < b.created_at; });
  const Timestamp origin = floor<minutes>(lo->created_at);
  const seconds width = minutes{interval_minutes};
  const auto count =
      static_cast<std::size_t>((hi->created_at - origin) / width) + 1;

  batches.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    batches[i].start = origin + width * static_cast<long>(i);
    batches[i].end = batches[i].start + width;
  }
  for (const Post& post : corpus) {
    auto index = static_cast<std::size_t>((post.created_at - origin) / width);
    batches[index].posts.push_back(post);
  }
  return batches;
}

std::string preprocess_text(std::string_view text) {
  // Hashtag signs: drop every run of '#' that precedes a word byte.
  std::string untagged;
  untagged.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '#') {
      std::size_t j = i;
      while (j < text.size() && text[j] == '#') ++j;
      if (j < text.size() && internal::is_word_byte(text[j])) {
        i = j;
        continue;
      }
      untagged.append(text.substr(i, j - i));
      i = j;
      continue;
    }
    untagged.push_back(text[i++]);
  }

  // URLs run to the next whitespace.
  std::string no_urls;
  no_urls.reserve(untagged.size());
  for (std::size_t i = 0; i < untagged.size();) {
    if (url_at(untagged, i)) {
      while (i < untagged.size() && !is_space(untagged[i])) ++i;
      continue;
    }
    no_urls.push_back(untagged[i++]);
  }

  std::string out;
  out.reserve(no_urls.size());
  bool pending_space = false;
  for (char c : no_urls) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }

  std::string_view rest = out;
  while (rest.substr(0, 3) == "RT ") rest.remove_prefix(3);
  return std::string(rest);
}

}  // namespace semtopic
