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
#ifndef SEMTOPIC_SRC_HTTP_CLIENT_H_
#define SEMTOPIC_SRC_HTTP_CLIENT_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semtopic::internal {

using QueryParams = std::vector<std::pair<std::string, std::string>>;

// GET endpoint?params. Connection failures, 429 and 5xx answers are retried
// up to retries more times and then reported as RemoteUnavailable; other
// non-200 answers raise MalformedResponse.
std::string http_get(std::string_view endpoint, const QueryParams& params,
                     int retries, std::string_view accept = "application/json");

}  // namespace semtopic::internal

#endif  // SEMTOPIC_SRC_HTTP_CLIENT_H_
