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

#ifndef CODEMIX_MIXLANG_H_
#define CODEMIX_MIXLANG_H_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "codemix/dictionary.h"
#include "codemix/noise.h"
#include "codemix/rng.h"

namespace codemix {

struct MixConfig {
  double replace_prob = 0.3;
  double delete_prob = 0.5;
  bool deletion_enabled = true;
  bool replacement_enabled = true;

  void Validate() const;
};

struct Masked {
  MaskSpan span;
};
struct Kept {
  Token token;
};
struct Replaced {
  Token token;
  // Chosen translation with the original trailing punctuation re-attached.
  std::string translation;
};
struct Deleted {
  Token token;
};

using MixedItem = std::variant<Masked, Kept, Replaced, Deleted>;

struct MixCounts {
  // Non-masked tokens with a dictionary entry.
  size_t covered = 0;
  size_t replaced = 0;
  size_t deleted = 0;
  size_t kept = 0;
  // Original tokens under mask spans.
  size_t masked = 0;
  size_t mask_items = 0;

  size_t NonMasked() const { return kept + replaced + deleted; }
  bool operator==(const MixCounts&) const = default;
};

struct MixedParagraph {
  std::vector<MixedItem> items;
  MixCounts counts;
  size_t token_count = 0;
};

// Per non-masked token, in stream order: no entry -> Kept; otherwise replaced
// with probability replace_prob, else deleted with probability delete_prob,
// else kept. Each covered token consumes exactly three draws (replace, delete,
// translation choice) whatever the outcome and whatever the toggles, so for a
// fixed stream the replaced set only grows as replace_prob grows.
MixedParagraph Mix(const NoisyParagraph& noisy, const BilingualDictionary& dict,
                   const MixConfig& config, RandomStream& rng);

// replaced / non-masked input tokens; 0 with no non-masked tokens.
double MixingRatio(const MixedParagraph& mixed);

}  // namespace codemix

#endif  // CODEMIX_MIXLANG_H_
