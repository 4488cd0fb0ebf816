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

#include "codemix/mixlang.h"

#include "codemix/error.h"
#include "codemix/utf8.h"

namespace codemix {

void MixConfig::Validate() const {
  if (!(replace_prob >= 0.0 && replace_prob <= 1.0)) {
    throw Error("mix.replace_prob must be in [0, 1]");
  }
  if (!(delete_prob >= 0.0 && delete_prob <= 1.0)) {
    throw Error("mix.delete_prob must be in [0, 1]");
  }
}

MixedParagraph Mix(const NoisyParagraph& noisy, const BilingualDictionary& dict,
                   const MixConfig& config, RandomStream& rng) {
  MixedParagraph out;
  out.token_count = noisy.token_count;
  out.items.reserve(noisy.items.size());
  MixCounts& counts = out.counts;

  for (const NoisyItem& item : noisy.items) {
    if (const auto* span = std::get_if<MaskSpan>(&item)) {
      counts.masked += span->size();
      ++counts.mask_items;
      out.items.emplace_back(Masked{*span});
      continue;
    }
    const Token& token = std::get<Token>(item);
    const utf8::PunctSplit parts = utf8::SplitTrailingPunct(token.surface);
    const std::vector<std::string>* translations =
        dict.Find(utf8::FoldCase(parts.body));
    if (translations == nullptr) {
      ++counts.kept;
      out.items.emplace_back(Kept{token});
      continue;
    }
    ++counts.covered;
    const double replace_draw = rng.NextDouble();
    const double delete_draw = rng.NextDouble();
    const uint64_t choice = rng.UniformBelow(translations->size());

    if (config.replacement_enabled && replace_draw < config.replace_prob) {
      ++counts.replaced;
      std::string surface = (*translations)[choice];
      surface.append(parts.suffix);
      out.items.emplace_back(Replaced{token, std::move(surface)});
    } else if (config.deletion_enabled && delete_draw < config.delete_prob) {
      ++counts.deleted;
      out.items.emplace_back(Deleted{token});
    } else {
      ++counts.kept;
      out.items.emplace_back(Kept{token});
    }
  }
  return out;
}

double MixingRatio(const MixedParagraph& mixed) {
  const size_t denominator = mixed.counts.NonMasked();
  if (denominator == 0) return 0.0;
  return static_cast<double>(mixed.counts.replaced) /
         static_cast<double>(denominator);
}

}  // namespace codemix
