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

#ifndef CODEMIX_NOISE_H_
#define CODEMIX_NOISE_H_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "codemix/corpus.h"
#include "codemix/rng.h"

namespace codemix {

struct NoiseConfig {
  double mask_fraction = 0.35;
  // Poisson mean of span lengths.
  double span_lambda = 3.5;
  bool permute_sentences = true;
  std::string mask_token = "<mask>";
  bool enabled = true;

  // Throws Error when a field is out of range.
  void Validate() const;
};

// One mask token standing in for original token positions [begin, end).
struct MaskSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool operator==(const MaskSpan&) const = default;
};

using NoisyItem = std::variant<MaskSpan, Token>;

struct NoisyParagraph {
  std::vector<NoisyItem> items;
  // sentence_order[k] is the original index of the k-th emitted sentence.
  std::vector<size_t> sentence_order;
  size_t token_count = 0;
};

// Sentence permutation followed by span masking inside the permuted stream.
//
// Masking budget is round(mask_fraction * token_count). Each step draws a
// span length L ~ Poisson(span_lambda), clamps it to [1, remaining budget]
// and to the longest run of unmasked tokens left inside one sentence, then
// picks a start uniformly among the placements that fit. Spans never cross
// sentence boundaries and each span becomes a single MaskSpan item.
//
// The number of draws taken from `rng` depends only on the paragraph shape
// and the noise config.
NoisyParagraph Corrupt(const Paragraph& paragraph, const NoiseConfig& config,
                       RandomStream& rng);

// Original tokens under a mask / original token count; 0 for empty input.
double MaskedFraction(const NoisyParagraph& noisy);

size_t MaskedTokenCount(const NoisyParagraph& noisy);

}  // namespace codemix

#endif  // CODEMIX_NOISE_H_
