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
#ifndef SEMTOPIC_CACHE_H_
#define SEMTOPIC_CACHE_H_

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace semtopic {

// On-disk response cache shared by the remote linker and the remote type
// resolver. One file per request digest under the cache directory. Each
// file carries a checksum of its payload; entries that fail verification are
// treated as misses and rewritten. Writers go through a temporary file and
// an atomic rename, so concurrent writers to one key leave one complete
// entry behind.
class ResponseCache {
 public:
  explicit ResponseCache(std::filesystem::path dir);

  // Hex SHA-256 of the request description.
  static std::string digest(std::string_view request);

  // Returns the stored payload for key, or invokes fetch, stores its result
  // verbatim and returns it. Exceptions from fetch propagate and nothing is
  // stored.
  std::string lookup_or_fetch(const std::string& key,
                              const std::function<std::string()>& fetch);

  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, std::string_view payload) const;

  std::filesystem::path path_for(const std::string& key) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace semtopic

#endif  // SEMTOPIC_CACHE_H_
