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

#include "codemix/config.h"

#include "codemix/error.h"
#include "gtest/gtest.h"

namespace codemix {
namespace {

using nlohmann::json;

TEST(ConfigTest, EmptyObjectGivesDefaults) {
  const PipelineConfig config = ConfigFromJson(json::object());
  EXPECT_DOUBLE_EQ(config.noise.mask_fraction, 0.35);
  EXPECT_DOUBLE_EQ(config.noise.span_lambda, 3.5);
  EXPECT_TRUE(config.noise.permute_sentences);
  EXPECT_EQ(config.noise.mask_token, "<mask>");
  EXPECT_DOUBLE_EQ(config.mix.delete_prob, 0.5);
  EXPECT_TRUE(config.mix.deletion_enabled);
  EXPECT_EQ(config.seed, 0u);
}

TEST(ConfigTest, RoundTripsThroughJson) {
  PipelineConfig config;
  config.noise.mask_fraction = 0.2;
  config.noise.enabled = false;
  config.mix.replace_prob = 0.45;
  config.mix.deletion_enabled = false;
  config.seed = 987654321987ULL;
  config.direction_label = "Tgt:id";
  const PipelineConfig again = ConfigFromJson(json::parse(ConfigToJson(config).dump()));
  EXPECT_EQ(ConfigToJson(again), ConfigToJson(config));
}

TEST(ConfigTest, UnknownKeysAreErrors) {
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"nosie": {}})")), Error);
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"mix": {"replace": 0.3}})")), Error);
}

TEST(ConfigTest, WrongTypesAndRangesAreErrors) {
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"seed": -1})")), Error);
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"mix": {"deletion_enabled": 1}})")), Error);
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"mix": {"replace_prob": 1.5}})")), Error);
  EXPECT_THROW(ConfigFromJson(json::parse(R"([1, 2])")), Error);
}

TEST(ConfigTest, OverridesApplyAfterParse) {
  PipelineConfig config = ConfigFromJson(json::parse(R"({"mix": {"replace_prob": 0.1}})"));
  ApplyOverride(&config, "mix.replace_prob=0.4");
  ApplyOverride(&config, "noise.permute_sentences=false");
  ApplyOverride(&config, "noise.mask_token=<m>");
  ApplyOverride(&config, "seed=42");
  ApplyOverride(&config, "direction_label=Src");
  EXPECT_DOUBLE_EQ(config.mix.replace_prob, 0.4);
  EXPECT_FALSE(config.noise.permute_sentences);
  EXPECT_EQ(config.noise.mask_token, "<m>");
  EXPECT_EQ(config.seed, 42u);
  EXPECT_EQ(config.direction_label, "Src");
}

TEST(ConfigTest, BadOverridesAreErrors) {
  PipelineConfig config;
  EXPECT_THROW(ApplyOverride(&config, "mix.bogus=1"), Error);
  EXPECT_THROW(ApplyOverride(&config, "noise=3"), Error);
  EXPECT_THROW(ApplyOverride(&config, "novalue"), Error);
  EXPECT_THROW(ApplyOverride(&config, "mix.replace_prob=high"), Error);
}

TEST(ConfigTest, Fnv1aKnownValues) {
  EXPECT_EQ(Fnv1a64(""), 0xCBF29CE484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xAF63DC4C8601EC8CULL);
  EXPECT_EQ(HexDigest(0xABCULL), "0000000000000abc");
}

}  // namespace
}  // namespace codemix
