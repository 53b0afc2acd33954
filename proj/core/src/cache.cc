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
#include "semtopic/cache.h"

#include <array>
#include <atomic>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "semtopic/errors.h"

namespace semtopic {
namespace {

constexpr std::string_view kMagic = "semtopic-cache 1";

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
  return hex;
}

}  // namespace

ResponseCache::ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    throw Error(fmt::format("cannot create cache directory {}: {}",
                            dir_.string(), ec.message()));
  }
}

std::string ResponseCache::digest(std::string_view request) {
  return sha256_hex(request);
}

std::filesystem::path ResponseCache::path_for(const std::string& key) const {
  return dir_ / (key + ".cache");
}

std::optional<std::string> ResponseCache::lookup(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  std::istringstream fields(header);
  std::string magic_a, magic_b, checksum;
  std::size_t length = 0;
  if (!(fields >> magic_a >> magic_b >> length >> checksum)) return std::nullopt;
  if (magic_a + " " + magic_b != kMagic) return std::nullopt;
  std::string payload(length, '\0');
  in.read(payload.data(), static_cast<std::streamsize>(length));
  if (static_cast<std::size_t>(in.gcount()) != length) return std::nullopt;
  if (in.peek() != std::char_traits<char>::eof()) return std::nullopt;
  if (sha256_hex(payload) != checksum) return std::nullopt;
  return payload;
}

void ResponseCache::store(const std::string& key, std::string_view payload) const {
  static std::atomic<unsigned long> counter{0};
  const auto final_path = path_for(key);
  auto tmp = final_path;
  tmp += fmt::format(".tmp.{}.{}",
                     std::hash<std::thread::id>{}(std::this_thread::get_id()),
                     counter.fetch_add(1));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(fmt::format("cannot write cache entry {}", tmp.string()));
    out << kMagic << ' ' << payload.size() << ' ' << sha256_hex(payload) << '\n';
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw Error(fmt::format("cannot write cache entry {}", tmp.string()));
  }
  std::error_code ec;
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(fmt::format("cannot install cache entry {}", final_path.string()));
  }
}

std::string ResponseCache::lookup_or_fetch(
    const std::string& key, const std::function<std::string()>& fetch) {
  if (auto hit = lookup(key)) return *std::move(hit);
  std::string payload = fetch();
  store(key, payload);
  return payload;
}

}  // namespace semtopic
