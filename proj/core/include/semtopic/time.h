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

#ifndef SEMTOPIC_TIME_H_
#define SEMTOPIC_TIME_H_

#include <chrono>
#include <string>
#include <string_view>

namespace semtopic {

// All timestamps are UTC with second precision.
using Timestamp = std::chrono::sys_seconds;

// Parses an RFC 3339 instant such as "2016-09-27T01:00:00Z" or
// "2016-09-27T03:00:00.250+02:00". Fractional seconds are truncated.
// Throws std::invalid_argument on malformed input.
Timestamp parse_rfc3339(std::string_view text);

// "2016-09-27T01:00:00Z"
std::string format_rfc3339(Timestamp t);

// "20160927T010000Z", used inside IRIs and file names.
std::string format_compact(Timestamp t);

}  // namespace semtopic

#endif  // SEMTOPIC_TIME_H_
