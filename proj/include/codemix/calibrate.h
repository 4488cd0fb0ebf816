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

#ifndef CODEMIX_CALIBRATE_H_
#define CODEMIX_CALIBRATE_H_

#include <cstddef>
#include <cstdint>

#include "codemix/corpus.h"
#include "codemix/dictionary.h"
#include "codemix/pipeline.h"
#include "json.hpp"

namespace codemix {

struct CalibrationResult {
  double target_ratio = 0.0;
  double replace_prob = 0.0;
  double achieved_ratio = 0.0;
  // Covered share of non-masked tokens in the noised sample.
  double coverage = 0.0;
  bool feasible = false;
  // Mixing-ratio evaluations performed by the search.
  int iterations = 0;
};

struct CalibrationOptions {
  // Targets closer than this to the coverage are reported as infeasible.
  double coverage_margin = 0.01;
  double tolerance = 0.005;
  int max_iterations = 25;
  size_t workers = 1;
};

// Searches replace_prob so that the empirical mixing ratio of the full
// pipeline on `sample` (with `base`'s noise and deletion settings and seed)
// is within tolerance of target_ratio. The first probe is target / coverage;
// later probes bisect the bracket. Throws Error on an empty sample, a target
// outside [0, 1], or when measured ratios are not monotone in the
// probability.
CalibrationResult CalibrateReplaceProb(const Corpus& sample,
                                       const BilingualDictionary& dict,
                                       const PipelineConfig& base,
                                       double target_ratio,
                                       const CalibrationOptions& options = {});

nlohmann::ordered_json CalibrationToJson(const CalibrationResult& result);

}  // namespace codemix

#endif  // CODEMIX_CALIBRATE_H_
