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

#ifndef CODEMIX_STATS_H_
#define CODEMIX_STATS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>

#include "codemix/corpus.h"
#include "json.hpp"

namespace codemix {

struct MixCounts;

// Numerator / denominator pair. Rates are kept as exact counts so that
// merging partial reports is exact; a zero denominator reads as 0.
struct Ratio {
  uint64_t num = 0;
  uint64_t den = 0;

  double value() const {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  }
  bool operator==(const Ratio&) const = default;
};

// Run-level statistics over generated pseudo-pairs.
struct GenerationReport {
  uint64_t paragraphs = 0;
  uint64_t tokens = 0;
  uint64_t masked = 0;
  uint64_t kept = 0;
  uint64_t replaced = 0;
  uint64_t deleted = 0;
  // Non-masked tokens with a dictionary entry.
  uint64_t covered = 0;
  // Tokens in rendered inputs, mask tokens included.
  uint64_t output_tokens = 0;
  // Rendered input length (in tokens) -> number of records.
  std::map<uint64_t, uint64_t> length_histogram;
  std::optional<Ratio> oov;

  // Adds one record's counts.
  void Add(const MixCounts& counts, uint64_t token_count, uint64_t output_length);

  uint64_t NonMasked() const { return tokens - masked; }

  Ratio masked_fraction() const { return {masked, tokens}; }
  // replaced / non-masked input tokens. This is the calibration target.
  Ratio mixing_ratio() const { return {replaced, NonMasked()}; }
  // Share of the other language among surviving word tokens of the input:
  // replaced / (replaced + kept).
  Ratio output_mixing_ratio() const { return {replaced, replaced + kept}; }
  // deleted / covered tokens that were not replaced.
  Ratio deletion_rate() const { return {deleted, covered - replaced}; }
  // covered / non-masked tokens; the upper bound of mixing_ratio.
  Ratio coverage() const { return {covered, NonMasked()}; }

  // mixing_ratio <= coverage, compared exactly as fractions.
  bool CoverageBoundHolds() const { return replaced <= covered; }
  // masked + kept + replaced + deleted == tokens and replaced <= covered.
  bool Consistent() const;

  bool operator==(const GenerationReport&) const = default;
};

// Counts add, histograms add, rates follow from the merged counts.
// Associative and commutative; the empty report is the identity.
GenerationReport Merge(const GenerationReport& a, const GenerationReport& b);

nlohmann::ordered_json ReportToJson(const GenerationReport& report);

// Plain-text table for terminals.
std::string FormatReport(const GenerationReport& report);

std::unordered_set<std::string> LoadVocabulary(const std::string& path);

// Token occurrences absent from vocab over all occurrences.
Ratio OovCounts(const Corpus& corpus, const std::unordered_set<std::string>& vocab);
double OovRate(const Corpus& corpus, const std::unordered_set<std::string>& vocab);

// Rebuilds a report from a JSON-lines dataset written by the pipeline. The
// result equals the report produced at generation time.
GenerationReport ReportFromDataset(std::istream& in, const std::string& name = "<stream>");

}  // namespace codemix

#endif  // CODEMIX_STATS_H_
