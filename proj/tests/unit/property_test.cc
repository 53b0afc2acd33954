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
#include <random>

#include <gtest/gtest.h>

#include "properties.h"
#include "semtopic/corpus.h"

namespace semtopic {
namespace {

TEST(PropertyTest, PreprocessIsIdempotent) {
  std::mt19937_64 rng(17);
  const std::vector<std::string> tokens{"RT ", "#tag", "##", "# ", "http://t.co/x", "www.a.b",
                                        "  ", "\t", "word", "@user", "é", "https", "x#y", "RT"};
  for (int i = 0; i < 500; ++i) {
    std::string text;
    const int n = static_cast<int>(rng() % 12);
    for (int k = 0; k < n; ++k) text += tokens[rng() % tokens.size()];
    const std::string once = preprocess_text(text);
    EXPECT_EQ(preprocess_text(once), once) << "input: [" << text << "]";
  }
}

void expect_ok(const testing::PropertyReport& r, std::size_t min_cases) {
  EXPECT_GE(r.cases, min_cases);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

TEST(PropertyTest, FilterMonotonicity) { expect_ok(testing::check_filter_monotonicity(1, 300), 300); }
TEST(PropertyTest, PruneMonotonicity) { expect_ok(testing::check_prune_monotonicity(2, 200), 200); }
TEST(PropertyTest, LocationMonotonicity) {
  expect_ok(testing::check_location_monotonicity(3, 200), 200);
}
TEST(PropertyTest, Relinking) { expect_ok(testing::check_relinking(4, 300), 300); }

}  // namespace
}  // namespace semtopic
