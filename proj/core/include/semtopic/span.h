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
#ifndef SEMTOPIC_SPAN_H_
#define SEMTOPIC_SPAN_H_

#include <compare>
#include <cstddef>

namespace semtopic {

// Half-open byte range [begin, end) into a UTF-8 string.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - begin; }
  bool empty() const { return end <= begin; }
  bool overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }

  auto operator<=>(const Span&) const = default;
};

}  // namespace semtopic

#endif  // SEMTOPIC_SPAN_H_
