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

#ifndef CODEMIX_ALIGNPROBE_H_
#define CODEMIX_ALIGNPROBE_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "codemix/corpus.h"
#include "codemix/dictionary.h"
#include "codemix/pipeline.h"
#include "json.hpp"

namespace codemix {

// Synthetic monolingual corpus with a planted lexicon.
struct SynthSpec {
  size_t vocab_size = 200;
  size_t n_sentences = 5000;
  // Sentence lengths are uniform on [min_length, max_length].
  size_t min_length = 5;
  size_t max_length = 15;
  // Word at frequency rank r (0-based) has weight 1 / (r + 1)^zipf_exponent.
  double zipf_exponent = 1.0;
  uint64_t seed = 0;
  std::string src_lang = "sa";
  std::string tgt_lang = "sb";

  void Validate() const;
};

struct SynthCorpus {
  Corpus corpus;
  // Bijection from the corpus vocabulary onto a second vocabulary.
  BilingualDictionary lexicon;
};

// Source words are "a<rank>", planted translations "b<k>" where k is a
// seeded permutation of the ranks. doc_id of paragraph i is i + 1.
SynthCorpus SynthesizeCorpus(const SynthSpec& spec);

// Lexical translation probabilities t(f | e) for IBM Model 1, with e drawn
// from pair targets (plus the null word) and f from pair inputs. Only
// co-occurring (e, f) pairs are stored; absent pairs have probability 0.
class TranslationTable {
 public:
  static constexpr std::string_view kNullWord = "<null>";

  // 0 when either word is unknown or the pair never co-occurred.
  double Prob(std::string_view f, std::string_view e) const;

  // f ids with stored probabilities for target word e; empty for unknown e.
  struct Row {
    std::span<const uint32_t> f_ids;
    std::span<const double> probs;
  };
  Row RowFor(std::string_view e) const;

  const std::vector<std::string>& e_vocab() const { return e_words_; }
  const std::vector<std::string>& f_vocab() const { return f_words_; }

  // Largest |sum_f t(f|e) - 1| over target words with any mass.
  double MaxNormalizationError() const;

 private:
  friend class Model1Trainer;

  std::vector<std::string> e_words_;  // id 0 is the null word
  std::vector<std::string> f_words_;
  std::unordered_map<std::string, uint32_t> e_index_;
  std::unordered_map<std::string, uint32_t> f_index_;
  // CSR layout: row e spans [row_start_[e], row_start_[e + 1]).
  std::vector<size_t> row_start_;
  std::vector<uint32_t> f_ids_;
  std::vector<double> probs_;
};

struct Model1Result {
  TranslationTable table;
  // Data log-likelihood before the first update and after each iteration;
  // size iterations + 1.
  std::vector<double> log_likelihood;
  std::vector<double> perplexity;
  uint64_t f_tokens = 0;
};

// Standard IBM Model 1 EM from a uniform start: the E-step adds
// t(f|e) / sum_e' t(f|e') to c(f, e) over the target words and the null word,
// the M-step renormalizes c(., e). The E-step runs over a fixed partition of
// the pairs and reduces partial counts in partition order, so results do not
// depend on `workers`. Throws Error on empty input or iterations < 1.
Model1Result TrainModel1(std::span<const PseudoPair> pairs, int iterations,
                         size_t workers = 1);

// Fraction of planted source words e whose best candidate under t(. | e) is
// one of their planted translations. Candidates are the translations that
// appear in the planted dictionary; ties, including the all-zero row of an
// unseen word, go to the lexicographically smallest candidate. 0 for an
// empty dictionary.
double PrecisionAt1(const TranslationTable& table, const BilingualDictionary& planted);

// Reads the id, input and target fields of a JSON-lines dataset.
std::vector<PseudoPair> ReadPairs(std::istream& in, const std::string& name = "<stream>");

nlohmann::ordered_json ProbeReportToJson(const Model1Result& result,
                                         double precision_at_1);

}  // namespace codemix

#endif  // CODEMIX_ALIGNPROBE_H_
