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
#ifndef SEMTOPIC_TESTS_SUPPORT_TURTLE_PARSER_H_
#define SEMTOPIC_TESTS_SUPPORT_TURTLE_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semtopic::testing {

// A small Turtle reader written independently of the emitter. It covers
// the subset of the grammar a topic document can contain: @prefix and
// PREFIX directives, IRIs, prefixed names, 'a', predicate and object lists,
// blank node labels, plain, typed and language-tagged string literals,
// and numeric and boolean literals.
struct Term {
  enum class Kind { kIri, kBlank, kLiteral };
  Kind kind = Kind::kIri;
  std::string value;     // IRI, blank label or lexical form
  std::string datatype;  // literals only
  std::string lang;

  bool operator==(const Term&) const = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;
};

class TurtleError : public std::runtime_error {
 public:
  TurtleError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

std::vector<Triple> parse_turtle(std::string_view document);

}  // namespace semtopic::testing

#endif  // SEMTOPIC_TESTS_SUPPORT_TURTLE_PARSER_H_
