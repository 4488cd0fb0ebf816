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

#include "codemix/calibrate.h"

#include <cmath>
#include <sstream>

#include "codemix/alignprobe.h"
#include "codemix/error.h"
#include "gtest/gtest.h"

namespace codemix {
namespace {

// Keeps dictionary entries for every `stride`-th rank only.
BilingualDictionary Thinned(const BilingualDictionary& lexicon, size_t stride) {
  BilingualDictionary out(lexicon.src_lang(), lexicon.tgt_lang());
  for (size_t i = 0; i < lexicon.entries().size(); i += stride) {
    const auto& [source, translations] = lexicon.entries()[i];
    for (const std::string& t : translations) out.Add(source, t);
  }
  return out;
}

SynthCorpus Synth(size_t n, uint64_t seed) {
  SynthSpec spec;
  spec.n_sentences = n;
  spec.seed = seed;
  return SynthesizeCorpus(spec);
}

TEST(CalibrateTest, FullCoverageRecoversAnalyticProbability) {
  const SynthCorpus synth = Synth(2000, 1);
  PipelineConfig base;
  base.seed = 9;
  const CalibrationResult result =
      CalibrateReplaceProb(synth.corpus, synth.lexicon, base, 0.30);
  EXPECT_TRUE(result.feasible);
  EXPECT_DOUBLE_EQ(result.coverage, 1.0);
  // E[ratio] = coverage * p with coverage 1.
  EXPECT_NEAR(result.replace_prob, 0.30, 0.01);
  EXPECT_NEAR(result.achieved_ratio, 0.30, 0.005);
  EXPECT_GE(result.iterations, 1);
  EXPECT_LE(result.iterations, 25);

  // The reported ratio is what the pipeline actually produces.
  base.mix.replace_prob = result.replace_prob;
  EXPECT_DOUBLE_EQ(SimulateReport(synth.corpus, synth.lexicon, base).mixing_ratio().value(),
                   result.achieved_ratio);
}

TEST(CalibrateTest, PartialCoverage) {
  const SynthCorpus synth = Synth(2000, 2);
  const BilingualDictionary dict = Thinned(synth.lexicon, 2);
  const CalibrationResult result =
      CalibrateReplaceProb(synth.corpus, dict, PipelineConfig{}, 0.25);
  ASSERT_TRUE(result.feasible);
  EXPECT_GT(result.coverage, 0.3);
  EXPECT_LT(result.coverage, 0.9);
  EXPECT_NEAR(result.achieved_ratio, 0.25, 0.005);
  EXPECT_NEAR(result.replace_prob, 0.25 / result.coverage, 0.02);
}

TEST(CalibrateTest, TargetAboveCoverageIsInfeasible) {
  const SynthCorpus synth = Synth(1000, 3);
  // Odd ranks only: under half of the occurrences under a Zipf law.
  BilingualDictionary dict(synth.lexicon.src_lang(), synth.lexicon.tgt_lang());
  for (size_t i = 1; i < synth.lexicon.entries().size(); i += 2) {
    dict.Add(synth.lexicon.entries()[i].first, synth.lexicon.entries()[i].second[0]);
  }
  const CalibrationResult result =
      CalibrateReplaceProb(synth.corpus, dict, PipelineConfig{}, 0.9);
  EXPECT_FALSE(result.feasible);
  EXPECT_DOUBLE_EQ(result.replace_prob, 1.0);
  EXPECT_LE(result.coverage, 0.5);
  EXPECT_DOUBLE_EQ(result.achieved_ratio, result.coverage);
}

TEST(CalibrateTest, RejectsBadInput) {
  const SynthCorpus synth = Synth(10, 4);
  EXPECT_THROW(CalibrateReplaceProb(Corpus{}, synth.lexicon, PipelineConfig{}, 0.3), Error);
  EXPECT_THROW(CalibrateReplaceProb(synth.corpus, synth.lexicon, PipelineConfig{}, 1.5),
               Error);
}

TEST(CalibrateTest, MixingRatioIsMonotoneOnFixedSeed) {
  const SynthCorpus synth = Synth(1500, 5);
  const BilingualDictionary dict = Thinned(synth.lexicon, 3);
  PipelineConfig config;
  config.seed = 11;
  double previous = -1.0;
  for (int step = 0; step <= 20; ++step) {
    config.mix.replace_prob = step / 20.0;
    const double ratio = SimulateReport(synth.corpus, dict, config).mixing_ratio().value();
    EXPECT_GE(ratio, previous) << "p=" << config.mix.replace_prob;
    previous = ratio;
  }
}

TEST(CalibrateTest, JsonFields) {
  CalibrationResult r;
  r.target_ratio = 0.3;
  r.replace_prob = 0.31;
  r.feasible = true;
  r.iterations = 3;
  const auto j = CalibrationToJson(r);
  EXPECT_EQ(j["feasible"], true);
  EXPECT_EQ(j["iterations"], 3);
  EXPECT_DOUBLE_EQ(j["replace_prob"].get<double>(), 0.31);
}

}  // namespace
}  // namespace codemix
