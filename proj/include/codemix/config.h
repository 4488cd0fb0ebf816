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

#ifndef CODEMIX_CONFIG_H_
#define CODEMIX_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "codemix/pipeline.h"
#include "json.hpp"

namespace codemix {

// JSON mirror of PipelineConfig:
//   {"noise": {"mask_fraction", "span_lambda", "permute_sentences",
//              "mask_token", "enabled"},
//    "mix": {"replace_prob", "delete_prob", "deletion_enabled",
//            "replacement_enabled"},
//    "seed", "direction_label"}
// Missing keys keep their defaults. Unknown keys and wrongly typed values
// throw Error.
PipelineConfig ConfigFromJson(const nlohmann::json& j);
nlohmann::ordered_json ConfigToJson(const PipelineConfig& config);
PipelineConfig LoadConfig(const std::string& path);

// Applies "section.key=value" (or "seed=..." / "direction_label=...").
void ApplyOverride(PipelineConfig* config, std::string_view assignment);

// 64-bit FNV-1a, used for config and input fingerprints in manifests.
uint64_t Fnv1a64(std::string_view bytes);
std::string HexDigest(uint64_t value);

}  // namespace codemix

#endif  // CODEMIX_CONFIG_H_
