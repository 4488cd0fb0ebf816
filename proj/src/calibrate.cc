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

#include "codemix/calibrate.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>

#include "codemix/error.h"

namespace codemix {

CalibrationResult CalibrateReplaceProb(const Corpus& sample,
                                       const BilingualDictionary& dict,
                                       const PipelineConfig& base,
                                       double target_ratio,
                                       const CalibrationOptions& options) {
  if (sample.empty()) throw Error("calibration sample is empty");
  if (!(target_ratio >= 0.0 && target_ratio <= 1.0)) {
    throw Error("target ratio must be in [0, 1]");
  }

  PipelineConfig config = base;
  config.mix.replacement_enabled = true;

  // Every evaluated probability, to check that measured ratios are monotone.
  std::map<double, double> measured;
  CalibrationResult result;
  result.target_ratio = target_ratio;

  auto evaluate = [&](double p) {
    config.mix.replace_prob = p;
    const GenerationReport report =
        SimulateReport(sample, dict, config, options.workers);
    const double ratio = report.mixing_ratio().value();
    ++result.iterations;
    auto [it, inserted] = measured.emplace(p, ratio);
    if (!inserted) return it->second;
    if (it != measured.begin() && std::prev(it)->second > ratio) {
      throw Error("mixing ratio decreased as replace_prob increased");
    }
    if (std::next(it) != measured.end() && std::next(it)->second < ratio) {
      throw Error("mixing ratio decreased as replace_prob increased");
    }
    return ratio;
  };

  // Coverage is measured on the noised sample and does not depend on the
  // replacement probability.
  {
    config.mix.replace_prob = 0.0;
    const GenerationReport report =
        SimulateReport(sample, dict, config, options.workers);
    result.coverage = report.coverage().value();
  }

  if (target_ratio > result.coverage - options.coverage_margin) {
    result.feasible = false;
    result.replace_prob = 1.0;
    result.achieved_ratio = evaluate(1.0);
    return result;
  }

  double lo = 0.0;
  double hi = 1.0;
  double p = std::clamp(target_ratio / result.coverage, 0.0, 1.0);
  double ratio = evaluate(p);
  double best_p = p;
  double best_ratio = ratio;
  while (std::abs(ratio - target_ratio) > options.tolerance &&
         result.iterations < options.max_iterations) {
    if (ratio < target_ratio) {
      lo = p;
    } else {
      hi = p;
    }
    p = 0.5 * (lo + hi);
    ratio = evaluate(p);
    if (std::abs(ratio - target_ratio) < std::abs(best_ratio - target_ratio)) {
      best_p = p;
      best_ratio = ratio;
    }
  }
  result.replace_prob = best_p;
  result.achieved_ratio = best_ratio;
  result.feasible = std::abs(best_ratio - target_ratio) <= options.tolerance;
  return result;
}

nlohmann::ordered_json CalibrationToJson(const CalibrationResult& r) {
  nlohmann::ordered_json j;
  j["target_ratio"] = r.target_ratio;
  j["replace_prob"] = r.replace_prob;
  j["achieved_ratio"] = r.achieved_ratio;
  j["coverage"] = r.coverage;
  j["feasible"] = r.feasible;
  j["iterations"] = r.iterations;
  return j;
}

}  // namespace codemix
