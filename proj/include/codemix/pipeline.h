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

#ifndef CODEMIX_PIPELINE_H_
#define CODEMIX_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_set>

#include "codemix/corpus.h"
#include "codemix/error.h"
#include "codemix/dictionary.h"
#include "codemix/mixlang.h"
#include "codemix/noise.h"
#include "codemix/stats.h"
#include "json.hpp"

namespace codemix {

struct PipelineConfig {
  NoiseConfig noise;
  MixConfig mix;
  uint64_t seed = 0;
  // Free-form tag stored with outputs, e.g. which side of a translation pair
  // the corpus represents.
  std::string direction_label;

  void Validate() const {
    noise.Validate();
    mix.Validate();
  }
};

// One (corrupted mixed input, clean target) training example.
struct PseudoPair {
  uint64_t doc_id = 0;
  std::string input_text;
  std::string target_text;
  MixCounts counts;
  size_t token_count = 0;
  // Per original token, in original order: 'K'ept, 'R'eplaced, 'D'eleted or
  // 'M'asked.
  std::string actions;

  bool operator==(const PseudoPair&) const = default;
};

// Space-joined rendering of kept and replaced surfaces and mask tokens.
std::string RenderInput(const MixedParagraph& mixed, const std::string& mask_token);

// Action letters indexed by original token position.
std::string RenderActions(const MixedParagraph& mixed);

// Corrupt then mix, on the stream DeriveStream(config.seed, paragraph.doc_id).
PseudoPair GeneratePair(const Paragraph& paragraph, const BilingualDictionary& dict,
                        const PipelineConfig& config);

struct OutputOptions {
  // Adds meta.actions to every record.
  bool audit = false;
};

// {"id","input","target","meta":{"replaced","deleted","masked","tokens","covered"}}
// on one line, keys in that order.
std::string RecordToJsonLine(const PseudoPair& pair, const OutputOptions& options = {});

class SinkError : public Error {
 public:
  SinkError(const std::string& what, uint64_t records_written)
      : Error(what), records_written_(records_written) {}
  uint64_t records_written() const { return records_written_; }

 private:
  uint64_t records_written_;
};

struct DatasetOptions {
  size_t workers = 1;
  OutputOptions output;
  // When set, the report carries the OOV rate of target tokens.
  const std::unordered_set<std::string>* vocab = nullptr;
};

// Writes one JSON line per paragraph in corpus order and returns the merged
// report. Output bytes do not depend on options.workers. Throws SinkError
// when the stream goes bad, and Error when the report violates its count
// invariants.
GenerationReport GenerateDataset(const Corpus& corpus, const BilingualDictionary& dict,
                                 const PipelineConfig& config, std::ostream& out,
                                 const DatasetOptions& options = {});

// Same report as GenerateDataset without rendering any output.
GenerationReport SimulateReport(const Corpus& corpus, const BilingualDictionary& dict,
                                const PipelineConfig& config, size_t workers = 1);

}  // namespace codemix

#endif  // CODEMIX_PIPELINE_H_
