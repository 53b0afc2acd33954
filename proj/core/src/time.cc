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
#include "semtopic/time.h"

#include <charconv>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

namespace semtopic {
namespace {

int read_digits(std::string_view text, std::size_t& pos, std::size_t count) {
  if (pos + count > text.size()) {
    throw std::invalid_argument("truncated timestamp");
  }
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data() + pos, text.data() + pos + count, value);
  if (ec != std::errc() || ptr != text.data() + pos + count) {
    throw std::invalid_argument("expected digits in timestamp");
  }
  pos += count;
  return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || (text[pos] != c && !(c == 'T' && text[pos] == 't') &&
                             !(c == 'T' && text[pos] == ' '))) {
    throw std::invalid_argument(fmt::format("expected '{}' in timestamp", c));
  }
  ++pos;
}

}  // namespace

Timestamp parse_rfc3339(std::string_view text) {
  using namespace std::chrono;
  std::size_t pos = 0;
  int y = read_digits(text, pos, 4);
  expect(text, pos, '-');
  int mo = read_digits(text, pos, 2);
  expect(text, pos, '-');
  int d = read_digits(text, pos, 2);
  expect(text, pos, 'T');
  int h = read_digits(text, pos, 2);
  expect(text, pos, ':');
  int mi = read_digits(text, pos, 2);
  expect(text, pos, ':');
  int s = read_digits(text, pos, 2);
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw std::invalid_argument("empty fraction");
  }
  if (pos >= text.size()) throw std::invalid_argument("missing UTC offset");
  int offset_minutes = 0;
  char zone = text[pos++];
  if (zone == 'Z' || zone == 'z') {
  } else if (zone == '+' || zone == '-') {
    int oh = read_digits(text, pos, 2);
    expect(text, pos, ':');
    int om = read_digits(text, pos, 2);
    if (oh > 23 || om > 59) throw std::invalid_argument("bad UTC offset");
    offset_minutes = (zone == '+' ? 1 : -1) * (oh * 60 + om);
  } else {
    throw std::invalid_argument("bad UTC offset");
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters");

  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                     day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) throw std::invalid_argument("invalid calendar date");
  // 60 is allowed for leap seconds and folded into the next minute.
  if (h > 23 || mi > 59 || s > 60) {
    throw std::invalid_argument("invalid time of day");
  }
  return sys_days{ymd} + hours{h} + minutes{mi} + seconds{s} -
         minutes{offset_minutes};
}

std::string format_rfc3339(Timestamp t) {
  using namespace std::chrono;
  auto day_point = floor<days>(t);
  year_month_day ymd{day_point};
  hh_mm_ss tod{t - day_point};
  return fmt::format("{:04}-{:02}-{:02}T{:02}:{:02}:{:02}Z",
                     static_cast<int>(ymd.year()),
                     static_cast<unsigned>(ymd.month()),
                     static_cast<unsigned>(ymd.day()), tod.hours().count(),
                     tod.minutes().count(), tod.seconds().count());
}

std::string format_compact(Timestamp t) {
  std::string s = format_rfc3339(t);
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '-' && c != ':') out.push_back(c);
  }
  return out;
}

}  // namespace semtopic
