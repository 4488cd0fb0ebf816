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

#include "codemix/alignprobe.h"

#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "codemix/error.h"
#include "codemix/utf8.h"
#include "gtest/gtest.h"

namespace codemix {
namespace {

PseudoPair Pair(const std::string& input, const std::string& target) {
  PseudoPair p;
  p.input_text = input;
  p.target_text = target;
  return p;
}

// Straightforward dense-map Model 1, kept independent of the CSR trainer.
std::map<std::pair<std::string, std::string>, double> ReferenceModel1(
    const std::vector<PseudoPair>& pairs, int iterations) {
  std::set<std::string> f_vocab;
  for (const PseudoPair& p : pairs) {
    for (const std::string& f : utf8::SplitWhitespace(p.input_text)) f_vocab.insert(f);
  }
  std::map<std::pair<std::string, std::string>, double> t;  // (f, e)
  auto targets = [](const PseudoPair& p) {
    std::vector<std::string> e = utf8::SplitWhitespace(p.target_text);
    e.insert(e.begin(), "<null>");
    return e;
  };
  for (const PseudoPair& p : pairs) {
    for (const std::string& f : utf8::SplitWhitespace(p.input_text)) {
      for (const std::string& e : targets(p)) t[{f, e}] = 1.0 / f_vocab.size();
    }
  }
  for (int it = 0; it < iterations; ++it) {
    std::map<std::pair<std::string, std::string>, double> count;
    std::map<std::string, double> total;
    for (const PseudoPair& p : pairs) {
      const std::vector<std::string> es = targets(p);
      for (const std::string& f : utf8::SplitWhitespace(p.input_text)) {
        double z = 0.0;
        for (const std::string& e : es) z += t[{f, e}];
        for (const std::string& e : es) {
          count[{f, e}] += t[{f, e}] / z;
          total[e] += t[{f, e}] / z;
        }
      }
    }
    for (auto& [key, value] : t) value = count[key] / total[key.second];
  }
  return t;
}

std::vector<PseudoPair> RandomPairs(RandomStream& rng, size_t n) {
  std::vector<PseudoPair> pairs;
  for (size_t i = 0; i < n; ++i) {
    std::string input;
    std::string target;
    const size_t len = 1 + rng.UniformBelow(6);
    for (size_t k = 0; k < len; ++k) {
      const uint64_t w = rng.UniformBelow(8);
      target += (k ? " a" : "a") + std::to_string(w);
      if (rng.Bernoulli(0.8)) {
        if (!input.empty()) input += ' ';
        input += (rng.Bernoulli(0.5) ? "b" : "a") + std::to_string(w);
      }
    }
    if (input.empty()) input = "<mask>";
    pairs.push_back(Pair(input, target));
  }
  return pairs;
}

TEST(SynthTest, DeterministicAndShaped) {
  SynthSpec spec;
  spec.vocab_size = 10;
  spec.n_sentences = 5;
  spec.seed = 8;
  const SynthCorpus a = SynthesizeCorpus(spec);
  const SynthCorpus b = SynthesizeCorpus(spec);
  ASSERT_EQ(a.corpus.size(), 5u);
  for (size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(a.corpus.paragraphs[i], b.corpus.paragraphs[i]);
    EXPECT_EQ(a.corpus.paragraphs[i].doc_id, i + 1);
    const size_t n = a.corpus.paragraphs[i].TokenCount();
    EXPECT_GE(n, spec.min_length);
    EXPECT_LE(n, spec.max_length);
  }
}

TEST(SynthTest, LexiconIsABijection) {
  SynthSpec spec;
  spec.n_sentences = 10;
  const SynthCorpus synth = SynthesizeCorpus(spec);
  ASSERT_EQ(synth.lexicon.size(), spec.vocab_size);
  std::set<std::string> images;
  for (const auto& [source, translations] : synth.lexicon.entries()) {
    ASSERT_EQ(translations.size(), 1u);
    images.insert(translations[0]);
  }
  EXPECT_EQ(images.size(), spec.vocab_size);
}

// Pearson chi-square against the uniform law. The 0.999 quantile of
// chi-square with k degrees of freedom comes from the Wilson-Hilferty
// approximation.
TEST(SynthTest, ZeroExponentIsUniform) {
  SynthSpec spec;
  spec.vocab_size = 50;
  spec.n_sentences = 4000;
  spec.zipf_exponent = 0.0;
  spec.seed = 21;
  const SynthCorpus synth = SynthesizeCorpus(spec);
  std::map<std::string, double> counts;
  double total = 0.0;
  for (const Paragraph& p : synth.corpus.paragraphs) {
    for (const Token& t : p.Tokens()) {
      counts[t.surface] += 1;
      total += 1;
    }
  }
  ASSERT_EQ(counts.size(), spec.vocab_size);
  const double expected = total / spec.vocab_size;
  double chi2 = 0.0;
  for (const auto& [word, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  const double k = spec.vocab_size - 1;
  const double z = 3.090;  // standard normal 0.999 quantile
  const double critical = k * std::pow(1 - 2 / (9 * k) + z * std::sqrt(2 / (9 * k)), 3);
  EXPECT_LT(chi2, critical);
}

TEST(SynthTest, ZipfFavoursLowRanks) {
  SynthSpec spec;
  spec.n_sentences = 2000;
  const SynthCorpus synth = SynthesizeCorpus(spec);
  std::map<std::string, int> counts;
  for (const Paragraph& p : synth.corpus.paragraphs) {
    for (const Token& t : p.Tokens()) ++counts[t.surface];
  }
  EXPECT_GT(counts["a0"], counts["a1"]);
  EXPECT_GT(counts["a1"], counts["a10"]);
  // Rank 0 over rank 1 should be close to 2 under exponent 1.
  EXPECT_NEAR(static_cast<double>(counts["a0"]) / counts["a1"], 2.0, 0.15);
}

TEST(SynthTest, RejectsInvalidSpecs) {
  SynthSpec spec;
  spec.vocab_size = 1;
  EXPECT_THROW(SynthesizeCorpus(spec), Error);
  spec = SynthSpec{};
  spec.min_length = 0;
  EXPECT_THROW(SynthesizeCorpus(spec), Error);
}

TEST(Model1Test, DegenerateSinglePair) {
  const std::vector<PseudoPair> pairs(5, Pair("x", "a"));
  const Model1Result result = TrainModel1(pairs, 5);
  EXPECT_DOUBLE_EQ(result.table.Prob("x", "a"), 1.0);
  EXPECT_DOUBLE_EQ(result.table.Prob("x", TranslationTable::kNullWord), 1.0);
  EXPECT_DOUBLE_EQ(result.table.Prob("y", "a"), 0.0);
  EXPECT_EQ(result.log_likelihood.size(), 6u);
}

TEST(Model1Test, MatchesReferenceImplementation) {
  RandomStream rng(6);
  const std::vector<PseudoPair> pairs = RandomPairs(rng, 150);
  const Model1Result result = TrainModel1(pairs, 4);
  const auto reference = ReferenceModel1(pairs, 4);
  for (const auto& [key, value] : reference) {
    EXPECT_NEAR(result.table.Prob(key.first, key.second), value, 1e-12)
        << key.first << "|" << key.second;
  }
}

TEST(Model1Test, LikelihoodIsMonotoneAndTableNormalized) {
  RandomStream rng(7);
  const std::vector<PseudoPair> pairs = RandomPairs(rng, 400);
  const Model1Result result = TrainModel1(pairs, 12);
  ASSERT_EQ(result.log_likelihood.size(), 13u);
  for (size_t i = 1; i < result.log_likelihood.size(); ++i) {
    EXPECT_GE(result.log_likelihood[i], result.log_likelihood[i - 1] - 1e-9) << i;
    EXPECT_LE(result.perplexity[i], result.perplexity[i - 1] + 1e-9) << i;
  }
  EXPECT_LT(result.table.MaxNormalizationError(), 1e-9);
}

TEST(Model1Test, IndependentOfWorkerCount) {
  RandomStream rng(8);
  const std::vector<PseudoPair> pairs = RandomPairs(rng, 3000);
  const Model1Result one = TrainModel1(pairs, 5, 1);
  const Model1Result many = TrainModel1(pairs, 5, 7);
  EXPECT_EQ(one.log_likelihood, many.log_likelihood);
  for (const std::string& e : one.table.e_vocab()) {
    const auto a = one.table.RowFor(e);
    const auto b = many.table.RowFor(e);
    ASSERT_EQ(a.probs.size(), b.probs.size());
    for (size_t k = 0; k < a.probs.size(); ++k) EXPECT_EQ(a.probs[k], b.probs[k]);
  }
}

TEST(Model1Test, RejectsEmptyInput) {
  EXPECT_THROW(TrainModel1({}, 3), Error);
  const std::vector<PseudoPair> pairs = {Pair("x", "a")};
  EXPECT_THROW(TrainModel1(pairs, 0), Error);
  const std::vector<PseudoPair> blank = {Pair("", "a")};
  EXPECT_THROW(TrainModel1(blank, 1), Error);
}

BilingualDictionary Planted(size_t n) {
  BilingualDictionary dict("sa", "sb");
  for (size_t i = 0; i < n; ++i) {
    dict.Add("a" + std::to_string(i), "b" + std::to_string((i * 7 + 3) % n));
  }
  return dict;
}

TEST(PrecisionAt1Test, PerfectTable) {
  const BilingualDictionary planted = Planted(20);
  std::vector<PseudoPair> pairs;
  for (const auto& [source, translations] : planted.entries()) {
    pairs.push_back(Pair(translations[0], source));
  }
  const Model1Result result = TrainModel1(pairs, 3);
  EXPECT_DOUBLE_EQ(result.table.Prob(planted.entries()[4].second[0],
                                     planted.entries()[4].first),
                   1.0);
  EXPECT_DOUBLE_EQ(PrecisionAt1(result.table, planted), 1.0);
}

// With no candidate ever observed every row ties at zero and the smallest
// candidate wins, which is right for exactly one word of a bijection.
TEST(PrecisionAt1Test, UninformativeTable) {
  const BilingualDictionary planted = Planted(20);
  std::vector<PseudoPair> pairs;
  for (const auto& [source, translations] : planted.entries()) {
    pairs.push_back(Pair(source, source));
  }
  const Model1Result result = TrainModel1(pairs, 2);
  EXPECT_DOUBLE_EQ(PrecisionAt1(result.table, planted), 1.0 / 20.0);
}

TEST(PrecisionAt1Test, TiesBreakLexicographically) {
  BilingualDictionary planted;
  planted.Add("e", "y");
  planted.Add("g", "x");
  // t(x|e) == t(y|e) after one iteration, so "x" wins the tie for "e" (wrong).
  // "g" is unseen, all candidates tie at zero and "x" wins again (right).
  const std::vector<PseudoPair> pairs = {Pair("y x", "e")};
  const Model1Result result = TrainModel1(pairs, 1);
  EXPECT_DOUBLE_EQ(result.table.Prob("x", "e"), result.table.Prob("y", "e"));
  EXPECT_DOUBLE_EQ(PrecisionAt1(result.table, planted), 0.5);
}

TEST(PrecisionAt1Test, EmptyDictionaryIsZero) {
  const std::vector<PseudoPair> pairs = {Pair("x", "a")};
  EXPECT_DOUBLE_EQ(PrecisionAt1(TrainModel1(pairs, 1).table, BilingualDictionary{}), 0.0);
}

TEST(ReadPairsTest, ParsesDatasetLines) {
  std::istringstream in(
      R"({"id":3,"input":"b1 <mask>","target":"a1 a2","meta":{}})" "\n\n"
      R"({"id":4,"input":"","target":"a3"})" "\n");
  const std::vector<PseudoPair> pairs = ReadPairs(in);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].doc_id, 3u);
  EXPECT_EQ(pairs[0].input_text, "b1 <mask>");
  EXPECT_EQ(pairs[1].target_text, "a3");

  std::istringstream bad(R"({"id":1,"target":"a"})");
  EXPECT_THROW(ReadPairs(bad), ParseError);
}

}  // namespace
}  // namespace codemix
