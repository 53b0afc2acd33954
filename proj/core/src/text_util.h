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
#ifndef SEMTOPIC_SRC_TEXT_UTIL_H_
#define SEMTOPIC_SRC_TEXT_UTIL_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace semtopic::internal {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool is_ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Bytes that belong to a word. Non-ASCII bytes count as word bytes so that
// UTF-8 sequences are never split.
inline bool is_word_byte(char c) {
  return is_ascii_alnum(c) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

inline char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

// True when [begin, end) of text is delimited by non-word bytes.
inline bool on_word_boundaries(std::string_view text, std::size_t begin,
                               std::size_t end) {
  bool left = begin == 0 || !is_word_byte(text[begin - 1]) ||
              !is_word_byte(text[begin]);
  bool right = end >= text.size() || !is_word_byte(text[end]) ||
               !is_word_byte(text[end - 1]);
  return left && right;
}

}  // namespace semtopic::internal

#endif  // SEMTOPIC_SRC_TEXT_UTIL_H_
