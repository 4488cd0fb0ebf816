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

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <thread>

#include "codemix/error.h"
#include "codemix/rng.h"

namespace codemix {
namespace {

constexpr uint64_t kSynthLexiconStream = 0x6C657869636F6EULL;  // "lexicon"
constexpr uint64_t kSynthTextStream = 0x74657874ULL;           // "text"
constexpr size_t kEStepBlock = 1024;

std::vector<std::string_view> SplitSpaces(std::string_view text) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t next = text.find(' ', pos);
    const size_t end = next == std::string_view::npos ? text.size() : next;
    if (end > pos) out.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

template <typename Fn>
void ParallelFor(size_t n, size_t workers, Fn&& fn) {
  workers = std::max<size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  const size_t chunk = (n + workers - 1) / workers;
  for (size_t w = 0; w < workers; ++w) {
    const size_t begin = std::min(n, w * chunk);
    const size_t end = std::min(n, begin + chunk);
    threads.emplace_back([&fn, begin, end] {
      for (size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (std::thread& t : threads) t.join();
}

}  // namespace

void SynthSpec::Validate() const {
  if (vocab_size < 2) throw Error("synth vocab_size must be at least 2");
  if (min_length < 1 || max_length < min_length) {
    throw Error("synth lengths must satisfy 1 <= min <= max");
  }
  if (!(zipf_exponent >= 0.0) || !std::isfinite(zipf_exponent)) {
    throw Error("synth zipf_exponent must be finite and non-negative");
  }
}

SynthCorpus SynthesizeCorpus(const SynthSpec& spec) {
  spec.Validate();
  SynthCorpus out;
  out.corpus.language_tag = spec.src_lang;
  out.lexicon = BilingualDictionary(spec.src_lang, spec.tgt_lang);

  std::vector<size_t> targets(spec.vocab_size);
  std::iota(targets.begin(), targets.end(), size_t{0});
  RandomStream lexicon_rng = DeriveStream(spec.seed, kSynthLexiconStream);
  for (size_t i = targets.size(); i > 1; --i) {
    std::swap(targets[i - 1], targets[lexicon_rng.UniformBelow(i)]);
  }
  std::vector<std::string> words(spec.vocab_size);
  for (size_t r = 0; r < spec.vocab_size; ++r) {
    words[r] = "a" + std::to_string(r);
    out.lexicon.Add(words[r], "b" + std::to_string(targets[r]));
  }

  std::vector<double> cdf(spec.vocab_size);
  double total = 0.0;
  for (size_t r = 0; r < spec.vocab_size; ++r) {
    total += std::pow(static_cast<double>(r + 1), -spec.zipf_exponent);
    cdf[r] = total;
  }

  RandomStream rng = DeriveStream(spec.seed, kSynthTextStream);
  const uint64_t span = spec.max_length - spec.min_length + 1;
  out.corpus.paragraphs.reserve(spec.n_sentences);
  std::string line;
  for (size_t i = 0; i < spec.n_sentences; ++i) {
    const size_t length = spec.min_length + rng.UniformBelow(span);
    line.clear();
    for (size_t k = 0; k < length; ++k) {
      const double u = rng.NextDouble() * total;
      size_t r = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
      r = std::min(r, spec.vocab_size - 1);
      if (k > 0) line.push_back(' ');
      line += words[r];
    }
    out.corpus.paragraphs.push_back(*MakeParagraph(line, i + 1));
  }
  return out;
}

double TranslationTable::Prob(std::string_view f, std::string_view e) const {
  auto ei = e_index_.find(std::string(e));
  auto fi = f_index_.find(std::string(f));
  if (ei == e_index_.end() || fi == f_index_.end()) return 0.0;
  const auto begin = f_ids_.begin() + row_start_[ei->second];
  const auto end = f_ids_.begin() + row_start_[ei->second + 1];
  auto it = std::lower_bound(begin, end, fi->second);
  if (it == end || *it != fi->second) return 0.0;
  return probs_[it - f_ids_.begin()];
}

TranslationTable::Row TranslationTable::RowFor(std::string_view e) const {
  auto ei = e_index_.find(std::string(e));
  if (ei == e_index_.end()) return {};
  const size_t begin = row_start_[ei->second];
  const size_t end = row_start_[ei->second + 1];
  return {std::span<const uint32_t>(f_ids_).subspan(begin, end - begin),
          std::span<const double>(probs_).subspan(begin, end - begin)};
}

double TranslationTable::MaxNormalizationError() const {
  double worst = 0.0;
  for (size_t e = 0; e + 1 < row_start_.size(); ++e) {
    double sum = 0.0;
    for (size_t k = row_start_[e]; k < row_start_[e + 1]; ++k) sum += probs_[k];
    if (sum > 0.0) worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

class Model1Trainer {
 public:
  Model1Trainer(std::span<const PseudoPair> pairs, size_t workers)
      : workers_(workers) {
    table_.e_words_.emplace_back(TranslationTable::kNullWord);
    table_.e_index_.emplace(std::string(TranslationTable::kNullWord), 0);
    Integerize(pairs);
    if (table_.f_words_.empty()) throw Error("Model 1 pairs contain no input tokens");
    BuildRows();
  }

  Model1Result Train(int iterations) {
    Model1Result result;
    result.f_tokens = f_tokens_;
    std::fill(table_.probs_.begin(), table_.probs_.end(),
              1.0 / static_cast<double>(table_.f_words_.size()));
    std::vector<double> counts(table_.probs_.size());
    for (int it = 0; it <= iterations; ++it) {
      std::fill(counts.begin(), counts.end(), 0.0);
      const double ll = ExpectationStep(&counts);
      result.log_likelihood.push_back(ll);
      result.perplexity.push_back(
          f_tokens_ == 0 ? 1.0 : std::exp(-ll / static_cast<double>(f_tokens_)));
      if (it < iterations) MaximizationStep(counts);
    }
    result.table = std::move(table_);
    return result;
  }

 private:
  struct Sentence {
    std::vector<uint32_t> e;  // null word first
    std::vector<uint32_t> f;
    // cell[i * e.size() + j] indexes t(f[i] | e[j]) in the CSR arrays.
    std::vector<uint32_t> cell;
  };

  static uint32_t Intern(std::string_view word, std::vector<std::string>* words,
                         std::unordered_map<std::string, uint32_t>* index) {
    auto [it, inserted] =
        index->emplace(std::string(word), static_cast<uint32_t>(words->size()));
    if (inserted) words->emplace_back(word);
    return it->second;
  }

  void Integerize(std::span<const PseudoPair> pairs) {
    sentences_.reserve(pairs.size());
    for (const PseudoPair& pair : pairs) {
      Sentence s;
      s.e.push_back(0);
      for (std::string_view w : SplitSpaces(pair.target_text)) {
        s.e.push_back(Intern(w, &table_.e_words_, &table_.e_index_));
      }
      for (std::string_view w : SplitSpaces(pair.input_text)) {
        s.f.push_back(Intern(w, &table_.f_words_, &table_.f_index_));
      }
      f_tokens_ += s.f.size();
      sentences_.push_back(std::move(s));
    }
  }

  void BuildRows() {
    std::vector<std::vector<uint32_t>> rows(table_.e_words_.size());
    for (const Sentence& s : sentences_) {
      for (uint32_t e : s.e) rows[e].insert(rows[e].end(), s.f.begin(), s.f.end());
    }
    table_.row_start_.assign(1, 0);
    for (std::vector<uint32_t>& row : rows) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
      table_.f_ids_.insert(table_.f_ids_.end(), row.begin(), row.end());
      table_.row_start_.push_back(table_.f_ids_.size());
    }
    if (table_.f_ids_.size() >= UINT32_MAX) {
      throw Error("translation table too large");
    }
    table_.probs_.assign(table_.f_ids_.size(), 0.0);
    for (Sentence& s : sentences_) {
      s.cell.reserve(s.f.size() * s.e.size());
      for (uint32_t f : s.f) {
        for (uint32_t e : s.e) {
          const auto begin = table_.f_ids_.begin() + table_.row_start_[e];
          const auto end = table_.f_ids_.begin() + table_.row_start_[e + 1];
          s.cell.push_back(static_cast<uint32_t>(
              std::lower_bound(begin, end, f) - table_.f_ids_.begin()));
        }
      }
    }
  }

  // Returns the log-likelihood of the current table and fills expected
  // counts. Posteriors are computed in parallel per block, then added in
  // sentence order.
  double ExpectationStep(std::vector<double>* counts) {
    const std::vector<double>& t = table_.probs_;
    double ll = 0.0;
    std::vector<std::vector<double>> posterior(kEStepBlock);
    std::vector<double> block_ll(kEStepBlock);
    for (size_t begin = 0; begin < sentences_.size(); begin += kEStepBlock) {
      const size_t n = std::min(kEStepBlock, sentences_.size() - begin);
      ParallelFor(n, workers_, [&](size_t k) {
        const Sentence& s = sentences_[begin + k];
        const size_t width = s.e.size();
        std::vector<double>& post = posterior[k];
        post.resize(s.cell.size());
        double sentence_ll = 0.0;
        for (size_t i = 0; i < s.f.size(); ++i) {
          double denom = 0.0;
          for (size_t j = 0; j < width; ++j) denom += t[s.cell[i * width + j]];
          for (size_t j = 0; j < width; ++j) {
            post[i * width + j] = t[s.cell[i * width + j]] / denom;
          }
          sentence_ll += std::log(denom / static_cast<double>(width));
        }
        block_ll[k] = sentence_ll;
      });
      for (size_t k = 0; k < n; ++k) {
        const Sentence& s = sentences_[begin + k];
        for (size_t c = 0; c < s.cell.size(); ++c) (*counts)[s.cell[c]] += posterior[k][c];
        ll += block_ll[k];
      }
    }
    return ll;
  }

  void MaximizationStep(const std::vector<double>& counts) {
    for (size_t e = 0; e + 1 < table_.row_start_.size(); ++e) {
      const size_t begin = table_.row_start_[e];
      const size_t end = table_.row_start_[e + 1];
      double sum = 0.0;
      for (size_t k = begin; k < end; ++k) sum += counts[k];
      for (size_t k = begin; k < end; ++k) {
        table_.probs_[k] = sum > 0.0 ? counts[k] / sum : 0.0;
      }
    }
  }

  size_t workers_;
  TranslationTable table_;
  std::vector<Sentence> sentences_;
  uint64_t f_tokens_ = 0;
};

Model1Result TrainModel1(std::span<const PseudoPair> pairs, int iterations,
                         size_t workers) {
  if (pairs.empty()) throw Error("Model 1 needs at least one pair");
  if (iterations < 1) throw Error("Model 1 needs at least one iteration");
  Model1Trainer trainer(pairs, std::max<size_t>(1, workers));
  return trainer.Train(iterations);
}

double PrecisionAt1(const TranslationTable& table,
                    const BilingualDictionary& planted) {
  if (planted.empty()) return 0.0;
  std::vector<std::string> candidates;
  for (const auto& [source, translations] : planted.entries()) {
    candidates.insert(candidates.end(), translations.begin(), translations.end());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  size_t correct = 0;
  for (const auto& [source, translations] : planted.entries()) {
    const std::string* best = &candidates.front();
    double best_prob = 0.0;
    const TranslationTable::Row row = table.RowFor(source);
    for (size_t k = 0; k < row.f_ids.size(); ++k) {
      const std::string& f = table.f_vocab()[row.f_ids[k]];
      const double p = row.probs[k];
      if (p < best_prob || p == 0.0) continue;
      if (!std::binary_search(candidates.begin(), candidates.end(), f)) continue;
      if (p > best_prob || f < *best) {
        best = &f;
        best_prob = p;
      }
    }
    if (std::find(translations.begin(), translations.end(), *best) !=
        translations.end()) {
      ++correct;
    }
  }
  return static_cast<double>(correct) / static_cast<double>(planted.size());
}

std::vector<PseudoPair> ReadPairs(std::istream& in, const std::string& name) {
  std::vector<PseudoPair> pairs;
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      throw ParseError(name, line_no, "not a JSON object");
    }
    if (!record.contains("input") || !record["input"].is_string() ||
        !record.contains("target") || !record["target"].is_string()) {
      throw ParseError(name, line_no, "record lacks string input/target");
    }
    PseudoPair pair;
    if (record.contains("id") && record["id"].is_number_unsigned()) {
      pair.doc_id = record["id"].get<uint64_t>();
    }
    pair.input_text = record["input"].get<std::string>();
    pair.target_text = record["target"].get<std::string>();
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

nlohmann::ordered_json ProbeReportToJson(const Model1Result& result,
                                         double precision_at_1) {
  nlohmann::ordered_json j;
  j["precision_at_1"] = precision_at_1;
  j["perplexity_per_iteration"] = result.perplexity;
  j["log_likelihood_per_iteration"] = result.log_likelihood;
  j["f_tokens"] = result.f_tokens;
  return j;
}

}  // namespace codemix
