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

#include "codemix/stats.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "codemix/error.h"
#include "codemix/mixlang.h"
#include "codemix/utf8.h"

namespace codemix {
namespace {

uint64_t CountSpaceSeparated(const std::string& text) {
  if (text.empty()) return 0;
  uint64_t n = 1;
  for (char c : text) n += (c == ' ');
  return n;
}

uint64_t RequireCount(const nlohmann::json& meta, const char* key,
                      const std::string& name, uint64_t line) {
  auto it = meta.find(key);
  if (it == meta.end() || !it->is_number_unsigned()) {
    throw ParseError(name, line, std::string("missing or invalid meta.") + key);
  }
  return it->get<uint64_t>();
}

}  // namespace

void GenerationReport::Add(const MixCounts& counts, uint64_t token_count,
                           uint64_t output_length) {
  ++paragraphs;
  tokens += token_count;
  masked += counts.masked;
  kept += counts.kept;
  replaced += counts.replaced;
  deleted += counts.deleted;
  covered += counts.covered;
  output_tokens += output_length;
  ++length_histogram[output_length];
}

bool GenerationReport::Consistent() const {
  return masked + kept + replaced + deleted == tokens && replaced <= covered &&
         covered <= NonMasked();
}

GenerationReport Merge(const GenerationReport& a, const GenerationReport& b) {
  GenerationReport out = a;
  out.paragraphs += b.paragraphs;
  out.tokens += b.tokens;
  out.masked += b.masked;
  out.kept += b.kept;
  out.replaced += b.replaced;
  out.deleted += b.deleted;
  out.covered += b.covered;
  out.output_tokens += b.output_tokens;
  for (const auto& [length, count] : b.length_histogram) {
    out.length_histogram[length] += count;
  }
  if (b.oov) {
    Ratio merged = out.oov.value_or(Ratio{});
    merged.num += b.oov->num;
    merged.den += b.oov->den;
    out.oov = merged;
  }
  return out;
}

nlohmann::ordered_json ReportToJson(const GenerationReport& r) {
  nlohmann::ordered_json j;
  j["paragraph_count"] = r.paragraphs;
  j["token_count"] = r.tokens;
  j["masked_fraction"] = r.masked_fraction().value();
  j["mixing_ratio"] = r.mixing_ratio().value();
  j["output_mixing_ratio"] = r.output_mixing_ratio().value();
  j["deletion_rate"] = r.deletion_rate().value();
  j["coverage"] = r.coverage().value();
  j["coverage_bound_holds"] = r.CoverageBoundHolds();
  if (r.oov) {
    j["oov_rate"] = r.oov->value();
  } else {
    j["oov_rate"] = nullptr;
  }
  j["counts"] = {{"masked", r.masked},           {"kept", r.kept},
                 {"replaced", r.replaced},       {"deleted", r.deleted},
                 {"covered", r.covered},         {"output_tokens", r.output_tokens}};
  if (r.oov) j["counts"]["oov"] = {{"missing", r.oov->num}, {"total", r.oov->den}};
  nlohmann::ordered_json histogram = nlohmann::ordered_json::array();
  for (const auto& [length, count] : r.length_histogram) {
    histogram.push_back({length, count});
  }
  j["length_histogram"] = std::move(histogram);
  return j;
}

std::string FormatReport(const GenerationReport& r) {
  std::ostringstream out;
  char buf[96];
  auto row = [&](const char* label, const Ratio& ratio) {
    std::snprintf(buf, sizeof(buf), "%-22s %10.6f  (%llu / %llu)\n", label,
                  ratio.value(), static_cast<unsigned long long>(ratio.num),
                  static_cast<unsigned long long>(ratio.den));
    out << buf;
  };
  out << "paragraphs             " << r.paragraphs << '\n';
  out << "tokens                 " << r.tokens << '\n';
  row("masked_fraction", r.masked_fraction());
  row("mixing_ratio", r.mixing_ratio());
  row("output_mixing_ratio", r.output_mixing_ratio());
  row("deletion_rate", r.deletion_rate());
  row("coverage", r.coverage());
  if (r.oov) row("oov_rate", *r.oov);
  out << "coverage_bound         " << (r.CoverageBoundHolds() ? "ok" : "VIOLATED")
      << '\n';
  return out.str();
}

std::unordered_set<std::string> LoadVocabulary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open vocabulary " + path);
  std::unordered_set<std::string> vocab;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    for (std::string& w : utf8::SplitWhitespace(line)) vocab.insert(std::move(w));
  }
  return vocab;
}

Ratio OovCounts(const Corpus& corpus,
                const std::unordered_set<std::string>& vocab) {
  Ratio r;
  for (const Paragraph& p : corpus.paragraphs) {
    for (const Sentence& s : p.sentences) {
      for (const Token& t : s.tokens) {
        ++r.den;
        if (!vocab.contains(t.surface)) ++r.num;
      }
    }
  }
  return r;
}

double OovRate(const Corpus& corpus,
               const std::unordered_set<std::string>& vocab) {
  return OovCounts(corpus, vocab).value();
}

GenerationReport ReportFromDataset(std::istream& in, const std::string& name) {
  GenerationReport report;
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(name, line_no, e.what());
    }
    if (!record.contains("input") || !record["input"].is_string() ||
        !record.contains("meta") || !record["meta"].is_object()) {
      throw ParseError(name, line_no, "record lacks input or meta");
    }
    const nlohmann::json& meta = record["meta"];
    MixCounts counts;
    counts.replaced = RequireCount(meta, "replaced", name, line_no);
    counts.deleted = RequireCount(meta, "deleted", name, line_no);
    counts.masked = RequireCount(meta, "masked", name, line_no);
    counts.covered = RequireCount(meta, "covered", name, line_no);
    const uint64_t tokens = RequireCount(meta, "tokens", name, line_no);
    if (counts.masked + counts.replaced + counts.deleted > tokens) {
      throw ParseError(name, line_no, "meta counts exceed token count");
    }
    counts.kept = tokens - counts.masked - counts.replaced - counts.deleted;
    report.Add(counts, tokens,
               CountSpaceSeparated(record["input"].get<std::string>()));
  }
  return report;
}

}  // namespace codemix
