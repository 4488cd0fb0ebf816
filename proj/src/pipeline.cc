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

#include "codemix/pipeline.h"

#include <algorithm>
#include <ostream>
#include <thread>
#include <vector>

namespace codemix {
namespace {

constexpr size_t kBatchSize = 4096;

uint64_t CountSpaceSeparated(const std::string& text) {
  if (text.empty()) return 0;
  return 1 + static_cast<uint64_t>(std::count(text.begin(), text.end(), ' '));
}

// Runs fn(begin, end, worker) over [0, n) split into `workers` contiguous
// ranges. fn must only touch state owned by its range or its worker slot.
template <typename Fn>
void ParallelRanges(size_t n, size_t workers, Fn&& fn) {
  workers = std::max<size_t>(1, std::min(workers, n));
  if (workers == 1) {
    fn(size_t{0}, n, size_t{0});
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const size_t chunk = (n + workers - 1) / workers;
  for (size_t w = 0; w < workers; ++w) {
    const size_t begin = std::min(n, w * chunk);
    const size_t end = std::min(n, begin + chunk);
    threads.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
  }
  for (std::thread& t : threads) t.join();
}

void CheckReport(const GenerationReport& report) {
  if (!report.Consistent()) {
    throw Error("generation report violates its count invariants");
  }
}

// Generates a batch of pairs in parallel, calling sink(pair, index) from the
// worker that produced it, and returns the merged report.
template <typename Sink>
GenerationReport RunBatch(const Corpus& corpus, size_t begin, size_t end,
                          const BilingualDictionary& dict,
                          const PipelineConfig& config, size_t workers,
                          Sink&& sink) {
  std::vector<GenerationReport> partial(std::max<size_t>(1, workers));
  ParallelRanges(end - begin, workers, [&](size_t lo, size_t hi, size_t w) {
    for (size_t i = lo; i < hi; ++i) {
      PseudoPair pair = GeneratePair(corpus.paragraphs[begin + i], dict, config);
      partial[w].Add(pair.counts, pair.token_count,
                     CountSpaceSeparated(pair.input_text));
      sink(std::move(pair), i);
    }
  });
  GenerationReport merged;
  for (const GenerationReport& r : partial) merged = Merge(merged, r);
  return merged;
}

}  // namespace

std::string RenderInput(const MixedParagraph& mixed, const std::string& mask_token) {
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out.push_back(' ');
    out += s;
  };
  for (const MixedItem& item : mixed.items) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Masked>) {
            append(mask_token);
          } else if constexpr (std::is_same_v<T, Kept>) {
            append(v.token.surface);
          } else if constexpr (std::is_same_v<T, Replaced>) {
            append(v.translation);
          }
        },
        item);
  }
  return out;
}

std::string RenderActions(const MixedParagraph& mixed) {
  std::string actions(mixed.token_count, '?');
  for (const MixedItem& item : mixed.items) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Masked>) {
            for (size_t i = v.span.begin; i < v.span.end; ++i) actions[i] = 'M';
          } else if constexpr (std::is_same_v<T, Kept>) {
            actions[v.token.index] = 'K';
          } else if constexpr (std::is_same_v<T, Replaced>) {
            actions[v.token.index] = 'R';
          } else {
            actions[v.token.index] = 'D';
          }
        },
        item);
  }
  return actions;
}

PseudoPair GeneratePair(const Paragraph& paragraph, const BilingualDictionary& dict,
                        const PipelineConfig& config) {
  RandomStream rng = DeriveStream(config.seed, paragraph.doc_id);
  const NoisyParagraph noisy = Corrupt(paragraph, config.noise, rng);
  const MixedParagraph mixed = Mix(noisy, dict, config.mix, rng);

  PseudoPair pair;
  pair.doc_id = paragraph.doc_id;
  pair.input_text = RenderInput(mixed, config.noise.mask_token);
  pair.target_text = paragraph.Text();
  pair.counts = mixed.counts;
  pair.token_count = mixed.token_count;
  pair.actions = RenderActions(mixed);
  return pair;
}

std::string RecordToJsonLine(const PseudoPair& pair, const OutputOptions& options) {
  nlohmann::ordered_json record;
  record["id"] = pair.doc_id;
  record["input"] = pair.input_text;
  record["target"] = pair.target_text;
  nlohmann::ordered_json meta;
  meta["replaced"] = pair.counts.replaced;
  meta["deleted"] = pair.counts.deleted;
  meta["masked"] = pair.counts.masked;
  meta["tokens"] = pair.token_count;
  meta["covered"] = pair.counts.covered;
  if (options.audit) meta["actions"] = pair.actions;
  record["meta"] = std::move(meta);
  return record.dump();
}

GenerationReport GenerateDataset(const Corpus& corpus, const BilingualDictionary& dict,
                                 const PipelineConfig& config, std::ostream& out,
                                 const DatasetOptions& options) {
  config.Validate();
  const size_t workers = std::max<size_t>(1, options.workers);
  GenerationReport report;
  std::vector<std::string> lines;
  uint64_t written = 0;
  for (size_t begin = 0; begin < corpus.size(); begin += kBatchSize) {
    const size_t end = std::min(corpus.size(), begin + kBatchSize);
    lines.assign(end - begin, std::string());
    GenerationReport batch = RunBatch(
        corpus, begin, end, dict, config, workers,
        [&](PseudoPair&& pair, size_t i) {
          lines[i] = RecordToJsonLine(pair, options.output);
        });
    report = Merge(report, batch);
    for (const std::string& line : lines) {
      out << line << '\n';
      if (!out) {
        throw SinkError("write failed after " + std::to_string(written) + " records",
                        written);
      }
      ++written;
    }
  }
  out.flush();
  if (!out) throw SinkError("flush failed", written);
  if (options.vocab != nullptr) report.oov = OovCounts(corpus, *options.vocab);
  CheckReport(report);
  return report;
}

GenerationReport SimulateReport(const Corpus& corpus, const BilingualDictionary& dict,
                                const PipelineConfig& config, size_t workers) {
  config.Validate();
  GenerationReport report = RunBatch(corpus, 0, corpus.size(), dict, config,
                                     std::max<size_t>(1, workers),
                                     [](PseudoPair&&, size_t) {});
  CheckReport(report);
  return report;
}

}  // namespace codemix
