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
#include "semtopic/vocab.h"

#include "builtin_temporal.h"

namespace semtopic {
namespace {

std::string expand(internal::TemporalNs ns, std::string_view local,
                   const std::string& topico) {
  switch (ns) {
    case internal::TemporalNs::kTopico:
      return topico + std::string(local);
    case internal::TemporalNs::kTime:
      return std::string(ns::kTime) + std::string(local);
    case internal::TemporalNs::kGreg:
      return std::string(ns::kGreg) + std::string(local);
  }
  return {};
}

}  // namespace

TopicoVocab::TopicoVocab(std::string base) : base_(std::move(base)) {}

std::string TopicoVocab::term(std::string_view local) const {
  return base_ + std::string(local);
}

std::string TopicoVocab::property_for(ElementKind kind) const {
  switch (kind) {
    case ElementKind::kPerson:
      return has_person();
    case ElementKind::kLocation:
      return has_location();
    case ElementKind::kTemporalExpression:
      return has_temporal_expression();
    case ElementKind::kOther:
      return is_about();
  }
  return is_about();
}

std::optional<ElementKind> TopicoVocab::kind_for_property(std::string_view iri) const {
  for (ElementKind kind : {ElementKind::kPerson, ElementKind::kLocation,
                           ElementKind::kTemporalExpression, ElementKind::kOther}) {
    if (property_for(kind) == iri) return kind;
  }
  return std::nullopt;
}

std::vector<TemporalIndividual> TopicoVocab::temporal_individuals() const {
  std::vector<TemporalIndividual> out;
  for (const auto& row : internal::kBuiltinTemporal) {
    out.push_back(TemporalIndividual{expand(row.ns, row.local, base_),
                                     expand(row.class_ns, row.class_local, base_)});
  }
  return out;
}

}  // namespace semtopic
