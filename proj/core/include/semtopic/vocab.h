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
#ifndef SEMTOPIC_VOCAB_H_
#define SEMTOPIC_VOCAB_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semtopic/namespaces.h"
#include "semtopic/semantics.h"

namespace semtopic {


// Named temporal individual, e.g. topico:Today or time:Saturday.
struct TemporalIndividual {
  std::string iri;
  std::string class_iri;
};

// Terms of the topic vocabulary under a configurable namespace.
class TopicoVocab {
 public:
  explicit TopicoVocab(std::string base = std::string(ns::kTopico));

  const std::string& base() const { return base_; }
  std::string term(std::string_view local) const;

  std::string topic_class() const { return term("Topic"); }
  std::string location_class() const { return term("Location"); }
  std::string temporal_expression_class() const {
    return term("TemporalExpression");
  }

  std::string has_agent() const { return term("hasAgent"); }
  std::string has_person() const { return term("hasPerson"); }
  std::string has_location() const { return term("hasLocation"); }
  std::string has_temporal_expression() const {
    return term("hasTemporalExpression");
  }
  std::string is_about() const { return term("isAbout"); }
  std::string observation_interval() const {
    return term("observationInterval");
  }
  std::string topic_created_at() const { return term("topicCreatedAt"); }
  static std::string maker() { return std::string(ns::kFoaf) + "maker"; }

  // Person -> hasPerson, Location -> hasLocation,
  // TemporalExpression -> hasTemporalExpression, Other -> isAbout.
  std::string property_for(ElementKind kind) const;
  std::optional<ElementKind> kind_for_property(std::string_view iri) const;

  // Relative expressions, parts of the day, seasons (topico namespace),
  // weekdays (time:) and months (greg:).
  std::vector<TemporalIndividual> temporal_individuals() const;

 private:
  std::string base_;
};

}  // namespace semtopic

#endif  // SEMTOPIC_VOCAB_H_
