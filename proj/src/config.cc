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

#include "codemix/config.h"

#include <cstdio>
#include <fstream>

#include "codemix/error.h"

namespace codemix {
namespace {

using nlohmann::json;

template <typename T>
T Get(const json& value, const std::string& key) {
  try {
    if constexpr (std::is_same_v<T, bool>) {
      if (!value.is_boolean()) throw Error("");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!value.is_string()) throw Error("");
    } else if constexpr (std::is_same_v<T, uint64_t>) {
      if (!value.is_number_unsigned()) throw Error("");
    } else {
      if (!value.is_number()) throw Error("");
    }
    return value.get<T>();
  } catch (const std::exception&) {
    throw Error("config key '" + key + "' has the wrong type");
  }
}

void ReadNoise(const json& j, NoiseConfig* noise) {
  if (!j.is_object()) throw Error("config key 'noise' must be an object");
  for (const auto& [key, value] : j.items()) {
    const std::string path = "noise." + key;
    if (key == "mask_fraction") {
      noise->mask_fraction = Get<double>(value, path);
    } else if (key == "span_lambda") {
      noise->span_lambda = Get<double>(value, path);
    } else if (key == "permute_sentences") {
      noise->permute_sentences = Get<bool>(value, path);
    } else if (key == "mask_token") {
      noise->mask_token = Get<std::string>(value, path);
    } else if (key == "enabled") {
      noise->enabled = Get<bool>(value, path);
    } else {
      throw Error("unknown config key '" + path + "'");
    }
  }
}

void ReadMix(const json& j, MixConfig* mix) {
  if (!j.is_object()) throw Error("config key 'mix' must be an object");
  for (const auto& [key, value] : j.items()) {
    const std::string path = "mix." + key;
    if (key == "replace_prob") {
      mix->replace_prob = Get<double>(value, path);
    } else if (key == "delete_prob") {
      mix->delete_prob = Get<double>(value, path);
    } else if (key == "deletion_enabled") {
      mix->deletion_enabled = Get<bool>(value, path);
    } else if (key == "replacement_enabled") {
      mix->replacement_enabled = Get<bool>(value, path);
    } else {
      throw Error("unknown config key '" + path + "'");
    }
  }
}

// Parses an override value as JSON, falling back to a bare string so that
// mask_token=<m> and direction_label=id-en work unquoted.
json ParseValue(std::string_view text) {
  json value = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) return json(std::string(text));
  return value;
}

}  // namespace

PipelineConfig ConfigFromJson(const json& j) {
  if (!j.is_object()) throw Error("config must be a JSON object");
  PipelineConfig config;
  for (const auto& [key, value] : j.items()) {
    if (key == "noise") {
      ReadNoise(value, &config.noise);
    } else if (key == "mix") {
      ReadMix(value, &config.mix);
    } else if (key == "seed") {
      config.seed = Get<uint64_t>(value, key);
    } else if (key == "direction_label") {
      config.direction_label = Get<std::string>(value, key);
    } else {
      throw Error("unknown config key '" + key + "'");
    }
  }
  config.Validate();
  return config;
}

nlohmann::ordered_json ConfigToJson(const PipelineConfig& c) {
  nlohmann::ordered_json j;
  j["noise"] = {{"mask_fraction", c.noise.mask_fraction},
                {"span_lambda", c.noise.span_lambda},
                {"permute_sentences", c.noise.permute_sentences},
                {"mask_token", c.noise.mask_token},
                {"enabled", c.noise.enabled}};
  j["mix"] = {{"replace_prob", c.mix.replace_prob},
              {"delete_prob", c.mix.delete_prob},
              {"deletion_enabled", c.mix.deletion_enabled},
              {"replacement_enabled", c.mix.replacement_enabled}};
  j["seed"] = c.seed;
  j["direction_label"] = c.direction_label;
  return j;
}

PipelineConfig LoadConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open config " + path);
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error("config " + path + " is not valid JSON");
  return ConfigFromJson(j);
}

void ApplyOverride(PipelineConfig* config, std::string_view assignment) {
  const size_t eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw Error("override '" + std::string(assignment) + "' is not key=value");
  }
  const std::string key(assignment.substr(0, eq));
  const json value = ParseValue(assignment.substr(eq + 1));
  json patch;
  const size_t dot = key.find('.');
  if (dot == std::string::npos) {
    patch[key] = value;
  } else {
    patch[key.substr(0, dot)][key.substr(dot + 1)] = value;
  }
  json merged = ConfigToJson(*config);
  merged.merge_patch(patch);
  // Re-validate the full object so unknown keys are rejected.
  *config = ConfigFromJson(merged);
}

uint64_t Fnv1a64(std::string_view bytes) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string HexDigest(uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace codemix
