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
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "http_client.h"

#include <chrono>
#include <thread>

#include <fmt/format.h>
#include <httplib.h>

#include "semtopic/errors.h"

namespace semtopic::internal {
namespace {

// Splits "scheme://host[:port]/path" into the client base and the path.
std::pair<std::string, std::string> split_endpoint(std::string_view endpoint) {
  auto scheme_end = endpoint.find("://");
  if (scheme_end == std::string_view::npos) {
    throw ConfigError(fmt::format("endpoint \"{}\" lacks a scheme", endpoint));
  }
  auto path_start = endpoint.find('/', scheme_end + 3);
  if (path_start == std::string_view::npos) {
    return {std::string(endpoint), "/"};
  }
  return {std::string(endpoint.substr(0, path_start)),
          std::string(endpoint.substr(path_start))};
}

}  // namespace

std::string http_get(std::string_view endpoint, const QueryParams& params,
                     int retries, std::string_view accept) {
  auto [base, path] = split_endpoint(endpoint);
  httplib::Params query;
  for (const auto& [k, v] : params) query.emplace(k, v);
  httplib::Headers headers{{"Accept", std::string(accept)}};
  const std::string full_path = httplib::append_query_params(path, query);

  std::string last_error;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(100 << attempt));
    }
    httplib::Client client(base);
    client.set_connection_timeout(10);
    client.set_read_timeout(60);
    client.set_follow_location(true);
    auto result = client.Get(full_path, headers);
    if (!result) {
      last_error = httplib::to_string(result.error());
      continue;
    }
    if (result->status == 200) return result->body;
    if (result->status == 429 || result->status >= 500) {
      last_error = fmt::format("HTTP {}", result->status);
      continue;
    }
    throw MalformedResponse(
        fmt::format("{}: unexpected HTTP status {}", endpoint, result->status));
  }
  throw RemoteUnavailable(fmt::format("{}: {}", endpoint, last_error));
}

}  // namespace semtopic::internal
