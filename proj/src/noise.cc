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

#include "codemix/noise.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "codemix/error.h"
#include "codemix/utf8.h"

namespace codemix {
namespace {

constexpr int kUnmasked = -1;

struct StreamSlot {
  const Token* token;
  size_t sentence;  // position of the sentence in the emitted order
  int span = kUnmasked;
};

// Length of the longest run of unmasked slots that stays inside a sentence.
size_t LongestFreeRun(const std::vector<StreamSlot>& stream) {
  size_t best = 0;
  size_t run = 0;
  for (size_t i = 0; i < stream.size(); ++i) {
    if (stream[i].span != kUnmasked) {
      run = 0;
      continue;
    }
    if (i > 0 && stream[i - 1].sentence != stream[i].sentence) run = 0;
    ++run;
    best = std::max(best, run);
  }
  return best;
}

// Start positions s such that [s, s + length) is unmasked and in one sentence.
std::vector<size_t> Placements(const std::vector<StreamSlot>& stream,
                               size_t length) {
  std::vector<size_t> starts;
  size_t run = 0;
  for (size_t i = 0; i < stream.size(); ++i) {
    if (stream[i].span != kUnmasked) {
      run = 0;
      continue;
    }
    if (i > 0 && stream[i - 1].sentence != stream[i].sentence) run = 0;
    ++run;
    if (run >= length) starts.push_back(i + 1 - length);
  }
  return starts;
}

}  // namespace

void NoiseConfig::Validate() const {
  if (!(mask_fraction >= 0.0 && mask_fraction <= 1.0)) {
    throw Error("noise.mask_fraction must be in [0, 1]");
  }
  if (!(span_lambda > 0.0) || !std::isfinite(span_lambda)) {
    throw Error("noise.span_lambda must be positive");
  }
  if (mask_token.empty() || utf8::ContainsWhitespace(mask_token)) {
    throw Error("noise.mask_token must be non-empty and contain no whitespace");
  }
}

NoisyParagraph Corrupt(const Paragraph& paragraph, const NoiseConfig& config,
                       RandomStream& rng) {
  NoisyParagraph out;
  out.token_count = paragraph.TokenCount();
  out.sentence_order.resize(paragraph.sentences.size());
  std::iota(out.sentence_order.begin(), out.sentence_order.end(), size_t{0});

  if (!config.enabled) {
    out.items.reserve(out.token_count);
    for (const Sentence& s : paragraph.sentences) {
      for (const Token& t : s.tokens) out.items.emplace_back(t);
    }
    return out;
  }

  if (config.permute_sentences) {
    for (size_t i = out.sentence_order.size(); i > 1; --i) {
      const size_t j = rng.UniformBelow(i);
      std::swap(out.sentence_order[i - 1], out.sentence_order[j]);
    }
  }

  std::vector<StreamSlot> stream;
  stream.reserve(out.token_count);
  for (size_t k = 0; k < out.sentence_order.size(); ++k) {
    for (const Token& t : paragraph.sentences[out.sentence_order[k]].tokens) {
      stream.push_back({&t, k});
    }
  }

  size_t budget = static_cast<size_t>(
      std::llround(config.mask_fraction * static_cast<double>(out.token_count)));
  budget = std::min(budget, out.token_count);
  int next_span = 0;
  while (budget > 0) {
    const size_t longest = LongestFreeRun(stream);
    if (longest == 0) break;
    size_t length = static_cast<size_t>(rng.Poisson(config.span_lambda));
    length = std::clamp<size_t>(length, 1, budget);
    length = std::min(length, longest);
    const std::vector<size_t> starts = Placements(stream, length);
    const size_t start = starts[rng.UniformBelow(starts.size())];
    for (size_t i = start; i < start + length; ++i) stream[i].span = next_span;
    ++next_span;
    budget -= length;
  }

  for (size_t i = 0; i < stream.size(); ++i) {
    const StreamSlot& slot = stream[i];
    if (slot.span == kUnmasked) {
      out.items.emplace_back(*slot.token);
      continue;
    }
    if (i > 0 && stream[i - 1].span == slot.span) {
      std::get<MaskSpan>(out.items.back()).end = slot.token->index + 1;
    } else {
      out.items.emplace_back(MaskSpan{slot.token->index, slot.token->index + 1});
    }
  }
  return out;
}

size_t MaskedTokenCount(const NoisyParagraph& noisy) {
  size_t masked = 0;
  for (const NoisyItem& item : noisy.items) {
    if (const auto* span = std::get_if<MaskSpan>(&item)) masked += span->size();
  }
  return masked;
}

double MaskedFraction(const NoisyParagraph& noisy) {
  if (noisy.token_count == 0) return 0.0;
  return static_cast<double>(MaskedTokenCount(noisy)) /
         static_cast<double>(noisy.token_count);
}

}  // namespace codemix
