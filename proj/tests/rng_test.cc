//
// Copyright 2026 The codemix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "codemix/rng.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

namespace codemix {
namespace {

TEST(RandomStreamTest, MatchesFrozenReference) {
  std::ifstream in(CODEMIX_FIXTURE_DIR "/stream_reference.json");
  ASSERT_TRUE(in);
  const nlohmann::json fixture = nlohmann::json::parse(in);
  ASSERT_FALSE(fixture["cases"].empty());
  for (const auto& c : fixture["cases"]) {
    const uint64_t seed = std::stoull(c["seed"].get<std::string>());
    const uint64_t doc_id = std::stoull(c["doc_id"].get<std::string>());
    RandomStream rng = DeriveStream(seed, doc_id);
    for (const auto& hex : c["first_draws"]) {
      EXPECT_EQ(rng.NextU64(), std::stoull(hex.get<std::string>(), nullptr, 16))
          << "seed=" << seed << " doc_id=" << doc_id;
    }
  }
}

TEST(RandomStreamTest, SameIdsGiveSameDraws) {
  RandomStream a = DeriveStream(17, 99);
  RandomStream b = DeriveStream(17, 99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.NextU64(), b.NextU64());
}

TEST(RandomStreamTest, AdjacentIdsDoNotCollide) {
  std::unordered_set<uint64_t> first_draws;
  constexpr uint64_t kIds = 1000000;
  first_draws.reserve(kIds);
  for (uint64_t id = 0; id < kIds; ++id) {
    first_draws.insert(DeriveStream(5, id).NextU64());
  }
  EXPECT_EQ(first_draws.size(), kIds);
}

TEST(RandomStreamTest, UniformBelowStaysInRange) {
  RandomStream rng(3);
  std::vector<int> histogram(7);
  constexpr int kDraws = 70000;
  for (int i = 0; i < kDraws; ++i) {
    const uint64_t v = rng.UniformBelow(7);
    ASSERT_LT(v, 7u);
    ++histogram[v];
  }
  for (int count : histogram) EXPECT_NEAR(count, kDraws / 7, 400);
  EXPECT_EQ(rng.UniformBelow(1), 0u);
  EXPECT_THROW(rng.UniformBelow(0), std::invalid_argument);
}

TEST(RandomStreamTest, DoublesAreInUnitInterval) {
  RandomStream rng(11);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.NextDouble();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

class PoissonTest : public ::testing::TestWithParam<double> {};

TEST_P(PoissonTest, MeanAndVarianceMatch) {
  const double mean = GetParam();
  RandomStream rng(1234);
  constexpr int kDraws = 200000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double x = static_cast<double>(rng.Poisson(mean));
    sum += x;
    sum_sq += x * x;
  }
  const double m = sum / kDraws;
  const double var = sum_sq / kDraws - m * m;
  // Five standard errors of the sample mean.
  EXPECT_NEAR(m, mean, 5 * std::sqrt(mean / kDraws));
  EXPECT_NEAR(var, mean, 0.03 * mean);
}

INSTANTIATE_TEST_SUITE_P(Means, PoissonTest, ::testing::Values(0.5, 3.5, 40.0));

TEST(RandomStreamTest, PoissonOfNonPositiveMeanIsZero) {
  RandomStream rng(1);
  EXPECT_EQ(rng.Poisson(0.0), 0u);
  EXPECT_EQ(rng.Poisson(-1.0), 0u);
}

}  // namespace
}  // namespace codemix
