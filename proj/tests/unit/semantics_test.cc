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
#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fixtures.h"
#include "semtopic/errors.h"
#include "semtopic/namespaces.h"
#include "semtopic/semantics.h"
#include "stub_server.h"

namespace semtopic {
namespace {

const std::string kDbr = "http://dbpedia.org/resource/";

HandleMap debate_handles() {
  return HandleMap({{"@HillaryClinton", "Hillary Clinton", kDbr + "Hillary_Clinton"},
                    {"@realDonaldTrump", "Donald Trump", kDbr + "Donald_Trump"}});
}

TEST(ExpandMentionsTest, ReplacesKnownHandle) {
  auto out = expand_mentions("@HillaryClinton speaks", debate_handles());
  EXPECT_EQ(out.text, "Hillary Clinton speaks");
  ASSERT_EQ(out.substitutions.size(), 1u);
  const auto& s = out.substitutions[0];
  EXPECT_EQ(s.entity_iri, kDbr + "Hillary_Clinton");
  EXPECT_EQ(s.original, (Span{0, 15}));
  EXPECT_EQ(s.expanded, (Span{0, 15}));
  EXPECT_EQ(out.text.substr(s.expanded.begin, s.expanded.length()), "Hillary Clinton");
}

TEST(ExpandMentionsTest, UnknownHandleUnchanged) {
  auto out = expand_mentions("@unknownuser42 hi", debate_handles());
  EXPECT_EQ(out.text, "@unknownuser42 hi");
  EXPECT_TRUE(out.substitutions.empty());
}

TEST(ExpandMentionsTest, TwoHandlesAndSurroundingBytesPreserved) {
  auto out = expand_mentions("x @realdonaldtrump, vs @HillaryClinton! mail@HillaryClinton",
                             debate_handles());
  EXPECT_EQ(out.text, "x Donald Trump, vs Hillary Clinton! mail@HillaryClinton");
  ASSERT_EQ(out.substitutions.size(), 2u);
  EXPECT_EQ(out.substitutions[1].expanded, (Span{19, 34}));
  EXPECT_EQ(out.substitutions[1].original, (Span{23, 38}));
  EXPECT_EQ(out.substitutions[0].original, (Span{2, 18}));
  EXPECT_EQ(out.substitutions[0].expanded, (Span{2, 14}));
}

TEST(HandleMapTest, ValidatesEntries) {
  EXPECT_THROW(HandleMap({{"nohandle", "X", "X"}}), InputError);
  EXPECT_THROW(HandleMap({{"@a", "A", "A"}, {"@A", "B", "B"}}), InputError);
  auto parsed = HandleMap::parse(
      R"([{"handle":"@timkaine","display_name":"Tim Kaine","entity_iri":"TK"}])");
  ASSERT_NE(parsed.find("@TimKaine"), nullptr);
  EXPECT_EQ(parsed.find("@timkaine")->display_name, "Tim Kaine");
  EXPECT_EQ(parsed.find("@other"), nullptr);
}

TEST(TemporalRulesTest, BuiltinHasFortyTwoRules) {
  auto rules = TemporalRuleSet::builtin();
  EXPECT_EQ(rules.rules().size(), 42u);
  std::size_t weekdays = 0, months = 0, seasons = 0;
  for (const auto& r : rules.rules()) {
    weekdays += r.target_iri.rfind(std::string(ns::kTime), 0) == 0;
    months += r.target_iri.rfind(std::string(ns::kGreg), 0) == 0;
    for (const char* s : {"Spring", "Summer", "Fall", "Winter"}) {
      seasons += r.target_iri == std::string(ns::kTopico) + s;
    }
  }
  EXPECT_EQ(weekdays, 7u);
  EXPECT_EQ(months, 12u);
  EXPECT_EQ(seasons, 4u);
}

TEST(TemporalRulesTest, SpecExamples) {
  auto rules = TemporalRuleSet::builtin();
  auto tdy = match_temporal_rules("tdy", rules);
  ASSERT_EQ(tdy.size(), 1u);
  EXPECT_EQ(tdy[0].target_iri, std::string(ns::kTopico) + "Today");

  auto sat = match_temporal_rules("saturday night", rules);
  ASSERT_EQ(sat.size(), 1u);
  EXPECT_EQ(sat[0].target_iri, std::string(ns::kTime) + "Saturday");
  EXPECT_EQ(sat[0].span, (Span{0, 8}));

  EXPECT_TRUE(match_temporal_rules("no time words", rules).empty());
}

TEST(TemporalRulesTest, CaseInsensitiveWholeWordLongestFirst) {
  auto rules = TemporalRuleSet::builtin();
  auto out = match_temporal_rules("TODAY, not todays; Last Night was fun. Today!", rules);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].spot, "today");
  EXPECT_EQ(out[1].target_iri, std::string(ns::kTopico) + "LastNight");
  EXPECT_EQ(out[1].spot, "last night");
  EXPECT_EQ(out[2].span, (Span{39, 44}));
}

TEST(TemporalRulesTest, CustomTablesValidate) {
  EXPECT_THROW(TemporalRuleSet({{{"x"}, "A"}, {{"x"}, "B"}}), InputError);
  EXPECT_THROW(TemporalRuleSet(std::vector<TemporalRule>{TemporalRule{{}, "A"}}), InputError);
  auto parsed = TemporalRuleSet::parse(R"([{"spots":["Noche"],"iri":"urn:night"}])");
  EXPECT_TRUE(parsed.is_target("urn:night"));
  EXPECT_EQ(match_temporal_rules("la noche", parsed).size(), 1u);
}

TEST(TemporalRulesTest, ShippedDataFileMatchesBuiltinTable) {
  auto file = TemporalRuleSet::load(SEMTOPIC_DATA_DIR "/temporal_rules.json");
  auto builtin = TemporalRuleSet::builtin();
  ASSERT_EQ(file.rules().size(), builtin.rules().size());
  for (std::size_t i = 0; i < file.rules().size(); ++i) {
    EXPECT_EQ(file.rules()[i].target_iri, builtin.rules()[i].target_iri);
    EXPECT_EQ(file.rules()[i].spots, builtin.rules()[i].spots);
  }
}

TEST(TemporalRulesTest, BuiltinFollowsConfiguredNamespace) {
  auto rules = TemporalRuleSet::builtin("urn:t#");
  EXPECT_TRUE(rules.is_target("urn:t#Today"));
  EXPECT_TRUE(rules.is_target(std::string(ns::kGreg) + "January"));
}

Annotation ann_for(const std::string& iri) {
  return Annotation{"debate", Span{0, 6}, iri, 0.5, 0.5};
}

TEST(YearFilterTest, SpecExamples) {
  const std::string iri = kDbr + "United_States_presidential_election_debates,_2012";
  EXPECT_EQ(apply_year_filter(ann_for(iri), "the 2012 debate again"), YearVerdict::kKeep);
  EXPECT_EQ(apply_year_filter(ann_for(iri), "the debate tonight"), YearVerdict::kDrop);
  EXPECT_EQ(apply_year_filter(ann_for(kDbr + "Debate"), "the debate"), YearVerdict::kKeep);
}

TEST(YearFilterTest, YearMustStandAlone) {
  const std::string iri = kDbr + "Debates_2016";
  EXPECT_EQ(apply_year_filter(ann_for(iri), "debate 20165"), YearVerdict::kDrop);
  EXPECT_EQ(apply_year_filter(ann_for(iri), "debate, 2016!"), YearVerdict::kKeep);
  EXPECT_EQ(apply_year_filter(ann_for(kDbr + "Route_12345"), "route"), YearVerdict::kKeep);
}

TEST(TypeDbTest, ParsesAndFinds) {
  auto db = TypeDb::parse(R"({"a":["t1","t2"],"b":[]})");
  EXPECT_EQ(db.size(), 2u);
  ASSERT_NE(db.find("a"), nullptr);
  EXPECT_EQ(db.find("a")->size(), 2u);
  EXPECT_EQ(db.find("c"), nullptr);
  EXPECT_THROW(TypeDb::parse("[1]"), InputError);
}

class CountingSource : public TypeSource {
 public:
  std::map<std::string, std::set<std::string>> fetch_types(
      std::span<const std::string> chunk) override {
    sizes.push_back(chunk.size());
    std::map<std::string, std::set<std::string>> out;
    for (const auto& iri : chunk) out[iri] = {"T"};
    return out;
  }
  std::vector<std::size_t> sizes;
};

TEST(ResolveTypesTest, ChunksAndLocalPrecedence) {
  std::set<std::string> iris;
  for (int i = 0; i < 120; ++i) iris.insert("urn:e" + std::to_string(i));
  CountingSource remote;
  auto types = resolve_entity_types(iris, nullptr, &remote);
  EXPECT_EQ(remote.sizes, (std::vector<std::size_t>{50, 50, 20}));
  EXPECT_EQ(types.size(), 120u);

  TypeDb local(std::map<std::string, std::set<std::string>, std::less<>>{{"urn:local", {"L"}}});
  CountingSource none;
  auto one = resolve_entity_types({"urn:local"}, &local, &none);
  EXPECT_TRUE(none.sizes.empty());
  EXPECT_EQ(one.at("urn:local").type_iris, (std::set<std::string>{"L"}));

  auto unknown = resolve_entity_types({"urn:unknown"}, &local, nullptr);
  EXPECT_TRUE(unknown.at("urn:unknown").type_iris.empty());
}

std::string sparql_answer(const std::string& query) {
  nlohmann::json bindings = nlohmann::json::array();
  std::size_t pos = 0;
  while ((pos = query.find('<', pos)) != std::string::npos) {
    auto end = query.find('>', pos);
    std::string iri = query.substr(pos + 1, end - pos - 1);
    bindings.push_back({{"s", {{"type", "uri"}, {"value", iri}}},
                        {"t", {{"type", "uri"}, {"value", "http://xmlns.com/foaf/0.1/Person"}}}});
    pos = end;
  }
  return nlohmann::json{{"head", {{"vars", {"s", "t"}}}}, {"results", {{"bindings", bindings}}}}
      .dump();
}

TEST(SparqlTypeSourceTest, OneHundredTwentyIrisMakeThreeRequests) {
  std::vector<std::size_t> values_per_request;
  std::mutex mu;
  testing::StubServer server([&](const testing::StubRequest& req) {
    const std::string& q = req.params.at("query");
    std::lock_guard lock(mu);
    values_per_request.push_back(static_cast<std::size_t>(std::count(q.begin(), q.end(), '<')));
    return testing::StubResponse{200, sparql_answer(q), "application/sparql-results+json"};
  });
  testing::TempDir dir;
  SparqlTypeSource remote(server.url("/sparql"), dir.path());
  std::set<std::string> iris;
  for (int i = 0; i < 120; ++i) iris.insert(kDbr + "Entity_" + std::to_string(i));
  auto types = resolve_entity_types(iris, nullptr, &remote);
  EXPECT_EQ(server.requests(), 3u);
  EXPECT_EQ(values_per_request, (std::vector<std::size_t>{50, 50, 20}));
  for (const auto& iri : iris) {
    EXPECT_EQ(types.at(iri).type_iris.count("http://xmlns.com/foaf/0.1/Person"), 1u);
  }
  SparqlTypeSource cached(server.url("/sparql"), dir.path());
  resolve_entity_types(iris, nullptr, &cached);
  EXPECT_EQ(server.requests(), 3u);
  EXPECT_EQ(cached.requests_issued(), 0u);
}

TEST(SparqlTypeSourceTest, EscapesIrisAndFailsLoudly) {
  const std::vector<std::string> chunk{kDbr + "Women's_health", kDbr + "A>B"};
  const std::string q = SparqlTypeSource::build_query(chunk);
  EXPECT_NE(q.find("VALUES ?s"), std::string::npos);
  EXPECT_EQ(q.find("A>B"), std::string::npos);

  testing::StubServer broken([](const testing::StubRequest&) {
    return testing::StubResponse{200, "{\"results\":42}"};
  });
  SparqlTypeSource remote(broken.url("/sparql"), {});
  EXPECT_THROW(resolve_entity_types({"urn:x"}, nullptr, &remote), MalformedResponse);
}

LinkedPost post(const std::string& id, const std::string& text,
                std::vector<std::pair<std::string, std::string>> spots_iris,
                LinkOrigin origin = LinkOrigin::kLinker) {
  LinkedPost p;
  p.post_id = id;
  p.text = text;
  for (auto& [spot, iri] : spots_iris) {
    auto b = text.find(spot);
    p.links.push_back(Link{spot, Span{b, b + spot.size()}, iri, origin});
  }
  return p;
}

TEST(ClassifyTest, LocationNeedsPrepositionRatio) {
  // Stanford follows "at" in 2 of 100 posts: ratio 0.02 > 0.01.
  std::vector<LinkedPost> posts;
  posts.push_back(post("1", "I'm at stanford medical", {{"stanford", "urn:Stanford"}}));
  posts.push_back(post("2", "back at stanford", {{"stanford", "urn:Stanford"}}));
  posts.push_back(post("3", "stanford wins", {{"stanford", "urn:Stanford"}}));
  TypeMap types;
  types["urn:Stanford"] = TypeRecord{
      "urn:Stanford", {std::string(ns::kGeo) + "SpatialThing", std::string(ns::kDbo) + "University"}};
  EXPECT_DOUBLE_EQ(preposition_ratio(posts, "urn:Stanford", 100), 0.02);
  EXPECT_EQ(classify_elements(posts, 100, types, 0.01).at("urn:Stanford"), ElementKind::kLocation);
  EXPECT_EQ(classify_elements(posts, 100, types, 0.02).at("urn:Stanford"), ElementKind::kOther);
  EXPECT_EQ(classify_elements(posts, 300, types, 0.01).at("urn:Stanford"), ElementKind::kOther);
}

TEST(ClassifyTest, PrecedenceAndDefaults) {
  std::vector<LinkedPost> posts;
  posts.push_back(post("1", "in kaine today in ohio", {{"kaine", "urn:Kaine"}, {"ohio", "urn:Ohio"}}));
  posts.push_back(post("2", "today", {{"today", "urn:Today"}}, LinkOrigin::kTemporal));
  posts.push_back(post("3", "thing", {{"thing", "urn:Thing"}}));
  TypeMap types;
  types["urn:Kaine"] = TypeRecord{"urn:Kaine", {std::string(ns::kDbo) + "Person",
                                                std::string(ns::kDbo) + "Place"}};
  types["urn:Ohio"] = TypeRecord{"urn:Ohio", {std::string(ns::kDbo) + "Place"}};
  types["urn:Today"] = TypeRecord{"urn:Today", {std::string(ns::kFoaf) + "Person"}};
  auto kinds = classify_elements(posts, 3, types, 0.01);
  EXPECT_EQ(kinds.size(), 4u);
  EXPECT_EQ(kinds.at("urn:Kaine"), ElementKind::kPerson);
  EXPECT_EQ(kinds.at("urn:Ohio"), ElementKind::kLocation);
  EXPECT_EQ(kinds.at("urn:Today"), ElementKind::kTemporalExpression);
  EXPECT_EQ(kinds.at("urn:Thing"), ElementKind::kOther);
}

TEST(ClassifyTest, PrepositionMustBeAdjacentWholeWord) {
  std::vector<LinkedPost> posts;
  posts.push_back(post("1", "within ohio", {{"ohio", "urn:Ohio"}}));
  posts.push_back(post("2", "in the ohio", {{"ohio", "urn:Ohio"}}));
  posts.push_back(post("3", "On Ohio", {{"Ohio", "urn:Ohio"}}));
  EXPECT_DOUBLE_EQ(preposition_ratio(posts, "urn:Ohio", 3), 1.0 / 3.0);
}

TEST(ElementKindTest, RoundTripsNames) {
  for (auto k : {ElementKind::kPerson, ElementKind::kLocation, ElementKind::kTemporalExpression,
                 ElementKind::kOther}) {
    EXPECT_EQ(parse_element_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_element_kind("Robot"), std::invalid_argument);
}

}  // namespace
}  // namespace semtopic
