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


#ifndef SEMTOPIC_NAMESPACES_H_
#define SEMTOPIC_NAMESPACES_H_

#include <string_view>

namespace semtopic {

namespace ns {
inline constexpr std::string_view kRdf =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kTime = "http://www.w3.org/2006/time#";
inline constexpr std::string_view kGreg =
    "http://www.w3.org/ns/time/gregorian#";
inline constexpr std::string_view kFoaf = "http://xmlns.com/foaf/0.1/";
inline constexpr std::string_view kDbr = "http://dbpedia.org/resource/";
inline constexpr std::string_view kDbo = "http://dbpedia.org/ontology/";
inline constexpr std::string_view kSchema = "http://schema.org/";
inline constexpr std::string_view kGeo =
    "http://www.w3.org/2003/01/geo/wgs84_pos#";
inline constexpr std::string_view kUmbel = "http://umbel.org/umbel/rc/";
inline constexpr std::string_view kTopico = "http://example.org/topico#";
}  // namespace ns

}  // namespace semtopic

#endif  // SEMTOPIC_NAMESPACES_H_
