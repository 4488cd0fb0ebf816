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

// codemix: build dictionaries, calibrate, generate and audit mixed-language
// denoising data.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "codemix/alignprobe.h"
#include "codemix/calibrate.h"
#include "codemix/config.h"
#include "codemix/corpus.h"
#include "codemix/dictionary.h"
#include "codemix/error.h"
#include "codemix/pipeline.h"
#include "codemix/stats.h"
#include "codemix/version.h"

namespace {

using codemix::Error;
using nlohmann::ordered_json;

struct Options {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<uint64_t> seed;
  size_t workers = 1;
  std::string out;
  std::string dict;
  std::string pivot;
  std::string corpus;
  std::string dataset;
  std::string vocab;
  std::optional<std::string> pretokenizer;
  bool skip_invalid_utf8 = false;
  bool no_noise = false;
  bool no_deletion = false;
  bool no_replacement = false;
  bool audit = false;
  double target_ratio = 0.30;
  size_t sample = 2000;
  int iterations = 10;
  codemix::SynthSpec synth;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  out.close();
  if (!out) throw Error("cannot write " + path);
}

class Manifest {
 public:
  explicit Manifest(const std::string& subcommand) {
    json_["tool"] = "codemix";
    json_["version"] = codemix::kVersion;
    json_["subcommand"] = subcommand;
    json_["inputs"] = ordered_json::object();
    json_["parameters"] = ordered_json::object();
    json_["outputs"] = ordered_json::array();
  }

  void Input(const std::string& role, const std::string& path) {
    if (path.empty()) return;
    json_["inputs"][role] = {
        {"path", path},
        {"fnv1a64", codemix::HexDigest(codemix::Fnv1a64(ReadFile(path)))}};
  }
  void Config(const codemix::PipelineConfig& config) {
    const ordered_json j = codemix::ConfigToJson(config);
    json_["config"] = j;
    json_["config_hash"] = codemix::HexDigest(codemix::Fnv1a64(j.dump()));
    json_["seed"] = config.seed;
  }
  template <typename T>
  void Parameter(const std::string& key, const T& value) {
    json_["parameters"][key] = value;
  }
  void Output(const std::string& path) { json_["outputs"].push_back(path); }

  void Write(const std::string& path) const { WriteFile(path, json_.dump(2) + "\n"); }

 private:
  ordered_json json_;
};

codemix::PipelineConfig ResolveConfig(const Options& o) {
  codemix::PipelineConfig config;
  if (!o.config_path.empty()) config = codemix::LoadConfig(o.config_path);
  for (const std::string& assignment : o.overrides) {
    codemix::ApplyOverride(&config, assignment);
  }
  if (o.seed) config.seed = *o.seed;
  if (o.no_noise) config.noise.enabled = false;
  if (o.no_deletion) config.mix.deletion_enabled = false;
  if (o.no_replacement) config.mix.replacement_enabled = false;
  config.Validate();
  return config;
}

codemix::Corpus LoadCorpusFrom(const Options& o) {
  codemix::LoadOptions load;
  load.pretokenizer = o.pretokenizer;
  load.invalid_utf8 = o.skip_invalid_utf8 ? codemix::InvalidUtf8Policy::kSkip
                                          : codemix::InvalidUtf8Policy::kAbort;
  codemix::LoadStats stats;
  codemix::Corpus corpus = codemix::LoadCorpus(o.corpus, load, &stats);
  if (stats.invalid_lines > 0) {
    std::cerr << "skipped " << stats.invalid_lines << " lines with invalid UTF-8\n";
  }
  return corpus;
}

void RecordCorpusInputs(const Options& o, Manifest* m) {
  m->Input("corpus", o.corpus);
  if (o.pretokenizer) m->Parameter("pretokenizer", *o.pretokenizer);
  m->Parameter("skip_invalid_utf8", o.skip_invalid_utf8);
}

int RunBuildDict(const Options& o) {
  codemix::BilingualDictionary dict = codemix::ParseMuse(o.dict);
  Manifest manifest("build-dict");
  manifest.Input("dict", o.dict);
  if (!o.pivot.empty()) {
    dict = codemix::ComposePivot(dict, codemix::ParseMuse(o.pivot));
    manifest.Input("pivot", o.pivot);
  }
  std::ostringstream text;
  codemix::WriteMuse(dict, text);
  WriteFile(o.out, text.str());
  manifest.Output(o.out);
  manifest.Write(o.out + ".manifest.json");
  std::cerr << "wrote " << dict.size() << " entries (" << dict.PairCount()
            << " pairs) to " << o.out << '\n';
  return 0;
}

int RunCalibrate(const Options& o) {
  const codemix::PipelineConfig config = ResolveConfig(o);
  const codemix::Corpus corpus = LoadCorpusFrom(o);
  const codemix::BilingualDictionary dict = codemix::ParseMuse(o.dict);
  const codemix::Corpus sample = codemix::SampleParagraphs(corpus, o.sample, config.seed);
  codemix::CalibrationOptions options;
  options.workers = o.workers;
  const codemix::CalibrationResult result =
      codemix::CalibrateReplaceProb(sample, dict, config, o.target_ratio, options);

  ordered_json report = codemix::CalibrationToJson(result);
  report["sample_paragraphs"] = sample.size();
  std::cout << "recommended replace_prob: " << result.replace_prob
            << (result.feasible ? "" : " (target exceeds coverage bound)") << '\n';
  std::cout << "achieved mixing ratio:    " << result.achieved_ratio << '\n';
  std::cout << "coverage:                 " << result.coverage << '\n';
  if (!o.out.empty()) {
    WriteFile(o.out, report.dump(2) + "\n");
    Manifest manifest("calibrate");
    RecordCorpusInputs(o, &manifest);
    manifest.Input("dict", o.dict);
    manifest.Config(config);
    manifest.Parameter("target_ratio", o.target_ratio);
    manifest.Parameter("sample", o.sample);
    manifest.Output(o.out);
    manifest.Write(o.out + ".manifest.json");
  }
  return 0;
}

int RunGenerate(const Options& o) {
  const codemix::PipelineConfig config = ResolveConfig(o);
  const codemix::Corpus corpus = LoadCorpusFrom(o);
  const codemix::BilingualDictionary dict = codemix::ParseMuse(o.dict);
  std::unordered_set<std::string> vocab;
  codemix::DatasetOptions options;
  options.workers = o.workers;
  options.output.audit = o.audit;
  if (!o.vocab.empty()) {
    vocab = codemix::LoadVocabulary(o.vocab);
    options.vocab = &vocab;
  }

  const std::string partial_marker = o.out + ".partial";
  std::filesystem::remove(partial_marker);
  codemix::GenerationReport report;
  try {
    std::ofstream out(o.out, std::ios::binary | std::ios::trunc);
    if (!out) throw codemix::SinkError("cannot open " + o.out, 0);
    report = codemix::GenerateDataset(corpus, dict, config, out, options);
  } catch (const std::exception& e) {
    WriteFile(partial_marker, std::string("incomplete output: ") + e.what() + "\n");
    throw;
  }

  ordered_json report_json = codemix::ReportToJson(report);
  report_json["direction_label"] = config.direction_label;
  const std::string report_path = o.out + ".report.json";
  WriteFile(report_path, report_json.dump(2) + "\n");

  Manifest manifest("generate");
  RecordCorpusInputs(o, &manifest);
  manifest.Input("dict", o.dict);
  manifest.Input("vocab", o.vocab);
  manifest.Config(config);
  manifest.Parameter("audit", o.audit);
  manifest.Output(o.out);
  manifest.Output(report_path);
  manifest.Write(o.out + ".manifest.json");
  std::cerr << codemix::FormatReport(report);
  return 0;
}

int RunStats(const Options& o) {
  std::ifstream in(o.dataset, std::ios::binary);
  if (!in) throw Error("cannot open dataset " + o.dataset);
  codemix::GenerationReport report = codemix::ReportFromDataset(in, o.dataset);
  if (!o.vocab.empty()) {
    // OOV over the clean side of the dataset.
    in.clear();
    in.seekg(0);
    codemix::Corpus targets;
    for (const codemix::PseudoPair& pair : codemix::ReadPairs(in, o.dataset)) {
      if (auto p = codemix::MakeParagraph(pair.target_text, pair.doc_id)) {
        targets.paragraphs.push_back(std::move(*p));
      }
    }
    report.oov = codemix::OovCounts(targets, codemix::LoadVocabulary(o.vocab));
  }
  std::cout << codemix::FormatReport(report);
  if (!o.out.empty()) {
    WriteFile(o.out, codemix::ReportToJson(report).dump(2) + "\n");
    Manifest manifest("stats");
    manifest.Input("dataset", o.dataset);
    manifest.Input("vocab", o.vocab);
    manifest.Output(o.out);
    manifest.Write(o.out + ".manifest.json");
  }
  return 0;
}

int RunProbe(const Options& o) {
  std::ifstream in(o.dataset, std::ios::binary);
  if (!in) throw Error("cannot open dataset " + o.dataset);
  const std::vector<codemix::PseudoPair> pairs = codemix::ReadPairs(in, o.dataset);
  const codemix::BilingualDictionary planted = codemix::ParseMuse(o.dict);
  const codemix::Model1Result result =
      codemix::TrainModel1(pairs, o.iterations, o.workers);
  const double precision = codemix::PrecisionAt1(result.table, planted);
  const ordered_json report = codemix::ProbeReportToJson(result, precision);
  std::cout << "precision_at_1: " << precision << '\n';
  if (!o.out.empty()) {
    WriteFile(o.out, report.dump(2) + "\n");
    Manifest manifest("probe");
    manifest.Input("dataset", o.dataset);
    manifest.Input("dict", o.dict);
    manifest.Parameter("iterations", o.iterations);
    manifest.Output(o.out);
    manifest.Write(o.out + ".manifest.json");
  } else {
    std::cout << report.dump(2) << '\n';
  }
  return 0;
}

int RunSynth(const Options& o) {
  const codemix::SynthCorpus synth = codemix::SynthesizeCorpus(o.synth);
  std::ostringstream corpus_text;
  codemix::WriteCorpus(synth.corpus, corpus_text);
  std::ostringstream dict_text;
  codemix::WriteMuse(synth.lexicon, dict_text);
  const std::string corpus_path = o.out + ".txt";
  const std::string dict_path = o.out + ".dict";
  WriteFile(corpus_path, corpus_text.str());
  WriteFile(dict_path, dict_text.str());

  Manifest manifest("synth");
  manifest.Parameter("vocab_size", o.synth.vocab_size);
  manifest.Parameter("sentences", o.synth.n_sentences);
  manifest.Parameter("min_length", o.synth.min_length);
  manifest.Parameter("max_length", o.synth.max_length);
  manifest.Parameter("zipf_exponent", o.synth.zipf_exponent);
  manifest.Parameter("seed", o.synth.seed);
  manifest.Output(corpus_path);
  manifest.Output(dict_path);
  manifest.Write(o.out + ".manifest.json");
  return 0;
}

void AddPipelineOptions(CLI::App* cmd, Options* o) {
  cmd->add_option("--config", o->config_path, "Pipeline config (JSON)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--set", o->overrides,
                  "Config override key=value, e.g. mix.replace_prob=0.4");
  cmd->add_option("--seed", o->seed, "Seed for every random draw");
  cmd->add_flag("--no-noise", o->no_noise, "Disable masking and permutation");
  cmd->add_flag("--no-deletion", o->no_deletion, "Disable token deletion");
  cmd->add_flag("--no-replacement", o->no_replacement,
                "Disable dictionary replacement");
}

void AddCorpusOptions(CLI::App* cmd, Options* o) {
  cmd->add_option("--corpus", o->corpus, "Monolingual corpus, one paragraph per line")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--pretokenizer", o->pretokenizer,
                  "Shell command applied to corpus lines before tokenization");
  cmd->add_flag("--skip-invalid-utf8", o->skip_invalid_utf8,
                "Skip and count lines with invalid UTF-8 instead of aborting");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed-language denoising data toolkit"};
  app.set_version_flag("--version", std::string(codemix::kVersion));
  app.require_subcommand(1);
  Options o;

  CLI::App* build = app.add_subcommand("build-dict", "Parse or pivot MUSE dictionaries");
  build->add_option("--dict", o.dict, "X-pivot dictionary")->required()->check(CLI::ExistingFile);
  build->add_option("--pivot", o.pivot, "Pivot-Y dictionary to compose with")
      ->check(CLI::ExistingFile);
  build->add_option("--out", o.out, "Output dictionary")->required();

  CLI::App* calibrate =
      app.add_subcommand("calibrate", "Find replace_prob for a target mixing ratio");
  AddPipelineOptions(calibrate, &o);
  AddCorpusOptions(calibrate, &o);
  calibrate->add_option("--dict", o.dict, "Dictionary")->required()->check(CLI::ExistingFile);
  calibrate->add_option("--target-ratio", o.target_ratio, "Target mixing ratio")
      ->check(CLI::Range(0.0, 1.0));
  calibrate->add_option("--sample", o.sample, "Paragraphs sampled for calibration");
  calibrate->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  calibrate->add_option("--out", o.out, "Calibration report (JSON)");

  CLI::App* generate = app.add_subcommand("generate", "Write (input, target) pseudo-pairs");
  AddPipelineOptions(generate, &o);
  AddCorpusOptions(generate, &o);
  generate->add_option("--dict", o.dict, "Dictionary")->required()->check(CLI::ExistingFile);
  generate->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  generate->add_option("--out", o.out, "Output JSON-lines dataset")->required();
  generate->add_option("--vocab", o.vocab, "Vocabulary for the OOV rate")
      ->check(CLI::ExistingFile);
  generate->add_flag("--audit", o.audit, "Add per-token actions to each record");

  CLI::App* stats = app.add_subcommand("stats", "Recompute the report of a dataset");
  stats->add_option("dataset", o.dataset, "JSON-lines dataset")
      ->required()
      ->check(CLI::ExistingFile);
  stats->add_option("--vocab", o.vocab, "Vocabulary for the OOV rate")
      ->check(CLI::ExistingFile);
  stats->add_option("--out", o.out, "Report (JSON)");

  CLI::App* probe = app.add_subcommand("probe", "IBM Model 1 alignment probe");
  probe->add_option("dataset", o.dataset, "JSON-lines dataset")
      ->required()
      ->check(CLI::ExistingFile);
  probe->add_option("--dict", o.dict, "Planted dictionary")->required()->check(CLI::ExistingFile);
  probe->add_option("--iterations", o.iterations, "EM iterations")->check(CLI::PositiveNumber);
  probe->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  probe->add_option("--out", o.out, "Probe report (JSON)");

  CLI::App* synth = app.add_subcommand("synth", "Write a synthetic corpus and planted lexicon");
  synth->add_option("--out", o.out, "Output prefix (<out>.txt, <out>.dict)")->required();
  synth->add_option("--vocab-size", o.synth.vocab_size, "Vocabulary size");
  synth->add_option("--sentences", o.synth.n_sentences, "Number of lines");
  synth->add_option("--min-length", o.synth.min_length, "Minimum sentence length");
  synth->add_option("--max-length", o.synth.max_length, "Maximum sentence length");
  synth->add_option("--zipf", o.synth.zipf_exponent, "Zipf exponent");
  synth->add_option("--seed", o.synth.seed, "Seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return RunBuildDict(o);
    if (*calibrate) return RunCalibrate(o);
    if (*generate) return RunGenerate(o);
    if (*stats) return RunStats(o);
    if (*probe) return RunProbe(o);
    if (*synth) return RunSynth(o);
  } catch (const std::exception& e) {
    std::cerr << "codemix: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
