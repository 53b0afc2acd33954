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
#include <thread>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fixtures.h"
#include "semtopic/errors.h"
#include "semtopic/linking.h"
#include "stub_server.h"

namespace semtopic {
namespace {

Annotation ann(std::string spot, std::size_t b, std::size_t e, std::string iri, double rho,
               double p) {
  return Annotation{std::move(spot), Span{b, e}, std::move(iri), rho, p};
}

TEST(FilterAnnotationsTest, StopAndFriskAcceptedUnderDefaults) {
  LinkerConfig config;
  auto out = filter_annotations({ann("Stop and Frisk", 0, 14, "dbr:Stop-and-frisk", 0.305, 0.366)},
                                config);
  ASSERT_EQ(out.accepted.size(), 1u);
  EXPECT_EQ(out.accepted[0].spot, "stop and frisk");
}

TEST(FilterAnnotationsTest, LowRhoRejected) {
  LinkerConfig config;
  auto out = filter_annotations({ann("x", 0, 1, "dbr:X", 0.10, 0.9)}, config);
  EXPECT_TRUE(out.accepted.empty());
  ASSERT_EQ(out.rejected.size(), 1u);
}

TEST(FilterAnnotationsTest, ThresholdsAreStrict) {
  LinkerConfig config;
  EXPECT_TRUE(filter_annotations({ann("x", 0, 1, "X", 0.15, 0.9)}, config).accepted.empty());
  EXPECT_TRUE(filter_annotations({ann("x", 0, 1, "X", 0.9, 0.35)}, config).accepted.empty());
  EXPECT_TRUE(filter_annotations({}, config).accepted.empty());
}

TEST(FilterAnnotationsTest, OverlapKeepsHigherRhoAndSortsBySpan) {
  LinkerConfig config;
  auto out = filter_annotations({ann("new york times", 10, 24, "NYT", 0.3, 0.5),
                                 ann("new york", 10, 18, "NYC", 0.6, 0.5),
                                 ann("hello", 0, 5, "Hello", 0.4, 0.5)},
                                config);
  ASSERT_EQ(out.accepted.size(), 2u);
  EXPECT_EQ(out.accepted[0].entity_iri, "Hello");
  EXPECT_EQ(out.accepted[1].entity_iri, "NYC");
  EXPECT_TRUE(out.rejected.empty());
}

TEST(FilterAnnotationsTest, OverlapResolvedBeforeThresholds) {
  // The higher-rho spot wins the overlap even though it then fails tau_p.
  LinkerConfig config;
  auto out = filter_annotations(
      {ann("a b", 0, 3, "AB", 0.8, 0.1), ann("b", 2, 3, "B", 0.5, 0.9)}, config);
  EXPECT_TRUE(out.accepted.empty());
  ASSERT_EQ(out.rejected.size(), 1u);
  EXPECT_EQ(out.rejected[0].entity_iri, "AB");
}

TEST(LinkerConfigTest, Validates) {
  LinkerConfig config;
  EXPECT_NO_THROW(config.validate());
  config.tau_rho = 1.5;
  EXPECT_THROW(config.validate(), ConfigError);
}

TEST(DictionaryLinkerTest, LongestWholeWordMatch) {
  DictionaryLinker linker({{{"new york", "New York"}, "NYC", 0.5, 0.6},
                           {{"york"}, "York", 0.4, 0.6},
                           {{"trump"}, "Trump", 0.45, 0.7}});
  auto out = linker.link("Trump in New York, not trumpet or newyork");
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].entity_iri, "Trump");
  EXPECT_EQ(out[0].span, (Span{0, 5}));
  EXPECT_EQ(out[1].entity_iri, "NYC");
  EXPECT_EQ(out[1].spot, "new york");
  EXPECT_EQ(out[1].span, (Span{9, 17}));
  EXPECT_DOUBLE_EQ(out[1].rho, 0.5);
}

TEST(DictionaryLinkerTest, DeterministicAndParsesFile) {
  auto linker = DictionaryLinker::parse(
      R"([{"spots":["clinton","hillary"],"iri":"HC","rho":0.4,"p":0.6}])");
  EXPECT_EQ(linker.link("Clinton and HILLARY"), linker.link("Clinton and HILLARY"));
  EXPECT_EQ(linker.link("Clinton and HILLARY").size(), 2u);
  EXPECT_TRUE(linker.link("").empty());
}

TEST(DictionaryLinkerTest, RejectsBadDictionaries) {
  EXPECT_THROW(DictionaryLinker({{{"a"}, "A", 0.1, 0.1}, {{"a"}, "B", 0.1, 0.1}}), InputError);
  EXPECT_THROW(DictionaryLinker({{{}, "A", 0.1, 0.1}}), InputError);
  EXPECT_THROW(DictionaryLinker({{{"a"}, "A", 1.1, 0.1}}), InputError);
  EXPECT_THROW(DictionaryLinker::parse("{}"), InputError);
  EXPECT_THROW(DictionaryLinker::parse(R"([{"spots":["a"]}])"), InputError);
}

TEST(ParseLinkerResponseTest, MapsTitlesAndUtf16Offsets) {
  // "é" is one UTF-16 unit and two bytes; the emoji is two units and four bytes.
  const std::string text = "caf\xC3\xA9 \xF0\x9F\x98\x80 Hillary Clinton";
  const std::string body = R"({"annotations":[
      {"spot":"Hillary Clinton","start":8,"end":23,"rho":0.4,"link_probability":0.6,
       "title":"Hillary Clinton"},
      {"spot":"caf","start":0,"end":4,"rho":0.2,"link_probability":0.5}]})";
  auto out = parse_linker_response(body, text, "http://dbpedia.org/resource/");
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].entity_iri, "http://dbpedia.org/resource/Hillary_Clinton");
  EXPECT_EQ(text.substr(out[0].span.begin, out[0].span.length()), "Hillary Clinton");
  EXPECT_EQ(out[0].spot, "hillary clinton");
}

TEST(ParseLinkerResponseTest, MalformedResponses) {
  EXPECT_THROW(parse_linker_response("nope", "t", ""), MalformedResponse);
  EXPECT_THROW(parse_linker_response("{}", "t", ""), MalformedResponse);
  EXPECT_THROW(parse_linker_response(
                   R"({"annotations":[{"title":"T","start":0,"end":9,"rho":0.1,"link_probability":0.1}]})",
                   "t", ""),
               MalformedResponse);
  EXPECT_TRUE(parse_linker_response(R"({"annotations":[]})", "t", "").empty());
}

std::string tagme_body(const std::string& text) {
  nlohmann::json anns = nlohmann::json::array();
  auto pos = text.find("Trump");
  if (pos != std::string::npos) {
    anns.push_back({{"spot", "Trump"}, {"start", pos}, {"end", pos + 5}, {"rho", 0.5},
                    {"link_probability", 0.7}, {"title", "Donald Trump"}});
  }
  return nlohmann::json{{"annotations", anns}}.dump();
}

TEST(RemoteLinkerTest, QueriesEndpointAndCaches) {
  testing::StubServer server([](const testing::StubRequest& req) {
    EXPECT_EQ(req.params.at("lang"), "en");
    EXPECT_EQ(req.params.at("gcube-token"), "secret");
    return testing::StubResponse{200, tagme_body(req.params.at("text"))};
  });
  testing::TempDir dir;
  LinkerConfig config;
  config.endpoint = server.url("/tagme/tag");
  config.token = "secret";
  config.cache_dir = dir.path();
  RemoteLinker linker(config);
  auto first = linker.link("Vote Trump & co?");
  ASSERT_EQ(first.size(), 1u);
  EXPECT_EQ(first[0].entity_iri, "http://dbpedia.org/resource/Donald_Trump");
  EXPECT_EQ(first[0].span, (Span{5, 10}));
  EXPECT_EQ(linker.link("Vote Trump & co?"), first);
  EXPECT_EQ(server.requests(), 1u);
  linker.link("Something else");
  EXPECT_EQ(server.requests(), 2u);
  EXPECT_EQ(linker.requests_issued(), 2u);

  RemoteLinker again(config);
  EXPECT_EQ(again.link("Vote Trump & co?"), first);
  EXPECT_EQ(server.requests(), 2u);
}

TEST(RemoteLinkerTest, CorruptCacheIsRefetched) {
  testing::StubServer server([](const testing::StubRequest& req) {
    return testing::StubResponse{200, tagme_body(req.params.at("text"))};
  });
  testing::TempDir dir;
  LinkerConfig config;
  config.endpoint = server.url("/tag");
  config.cache_dir = dir.path();
  RemoteLinker linker(config);
  linker.link("Trump");
  for (const auto& entry : std::filesystem::directory_iterator(dir / "linker")) {
    std::filesystem::resize_file(entry.path(), 10);
  }
  EXPECT_EQ(linker.link("Trump").size(), 1u);
  EXPECT_EQ(server.requests(), 2u);
  EXPECT_EQ(linker.link("Trump").size(), 1u);
  EXPECT_EQ(server.requests(), 2u);
}

TEST(RemoteLinkerTest, BoundsInFlightRequests) {
  testing::StubServer server([](const testing::StubRequest& req) {
    std::this_thread::sleep_for(std::chrono::milliseconds(30));
    return testing::StubResponse{200, tagme_body(req.params.at("text"))};
  });
  LinkerConfig config;
  config.endpoint = server.url("/tag");
  config.max_in_flight = 2;
  RemoteLinker linker(config);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] { linker.link("Trump " + std::to_string(i)); });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(server.requests(), 8u);
  EXPECT_LE(server.peak_concurrency(), 2u);
}

TEST(RemoteLinkerTest, ErrorsAreTyped) {
  testing::StubServer failing([](const testing::StubRequest&) {
    return testing::StubResponse{503, "busy"};
  });
  LinkerConfig config;
  config.endpoint = failing.url("/tag");
  config.retries = 1;
  RemoteLinker linker(config);
  EXPECT_THROW(linker.link("x"), RemoteUnavailable);
  EXPECT_EQ(failing.requests(), 2u);

  testing::StubServer garbage([](const testing::StubRequest&) {
    return testing::StubResponse{200, "<html>"};
  });
  config.endpoint = garbage.url("/tag");
  RemoteLinker bad(config);
  EXPECT_THROW(bad.link("x"), MalformedResponse);

  config.endpoint = "http://127.0.0.1:1/tag";
  config.retries = 0;
  RemoteLinker unreachable(config);
  EXPECT_THROW(unreachable.link("x"), RemoteUnavailable);
}

TEST(AnnotatePostTest, FiltersThroughLinker) {
  DictionaryLinker linker({{{"trump"}, "Trump", 0.45, 0.7}, {{"great"}, "Great", 0.05, 0.1}});
  LinkerConfig config;
  auto out = annotate_post("trump is great", linker, config);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].entity_iri, "Trump");
  EXPECT_TRUE(annotate_post("", linker, config).empty());
}

}  // namespace
}  // namespace semtopic
