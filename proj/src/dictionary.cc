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

#include "codemix/dictionary.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>

#include "codemix/error.h"
#include "codemix/utf8.h"

namespace codemix {

std::string NormalizeWord(std::string_view word) {
  return utf8::FoldCase(utf8::SplitTrailingPunct(word).body);
}

bool BilingualDictionary::Add(std::string_view source,
                              std::string_view translation) {
  if (source.empty() || translation.empty()) {
    throw Error("dictionary words must be non-empty");
  }
  if (utf8::ContainsWhitespace(source) || utf8::ContainsWhitespace(translation)) {
    throw Error("dictionary words must not contain whitespace");
  }
  std::string key = utf8::FoldCase(source);
  auto it = index_.find(key);
  if (it == index_.end()) {
    index_.emplace(key, entries_.size());
    entries_.emplace_back(std::move(key),
                          std::vector<std::string>{std::string(translation)});
    return true;
  }
  std::vector<std::string>& translations = entries_[it->second].second;
  if (std::find(translations.begin(), translations.end(), translation) !=
      translations.end()) {
    return false;
  }
  translations.emplace_back(translation);
  return true;
}

const std::vector<std::string>* BilingualDictionary::Find(
    std::string_view key) const {
  auto it = index_.find(std::string(key));
  if (it == index_.end()) return nullptr;
  return &entries_[it->second].second;
}

size_t BilingualDictionary::PairCount() const {
  size_t n = 0;
  for (const Entry& e : entries_) n += e.second.size();
  return n;
}

BilingualDictionary ReadMuse(std::istream& in, std::string src_lang,
                             std::string tgt_lang, const std::string& name) {
  BilingualDictionary dict(std::move(src_lang), std::move(tgt_lang));
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!utf8::IsValid(line)) throw ParseError(name, line_no, "invalid UTF-8");
    std::vector<std::string> fields = utf8::SplitWhitespace(line);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw ParseError(name, line_no,
                       "expected 2 fields, found " + std::to_string(fields.size()));
    }
    dict.Add(fields[0], fields[1]);
  }
  return dict;
}

BilingualDictionary ParseMuse(const std::string& path, std::string src_lang,
                              std::string tgt_lang) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open dictionary " + path);
  return ReadMuse(in, std::move(src_lang), std::move(tgt_lang), path);
}

BilingualDictionary ParseMuse(const std::string& path) {
  auto [src, tgt] = LanguagePairFromFilename(path);
  return ParseMuse(path, src, tgt);
}

std::pair<std::string, std::string> LanguagePairFromFilename(
    const std::string& path) {
  static const std::regex kPair(R"(^([A-Za-z]{2,3})-([A-Za-z]{2,3})(\..*)?$)");
  const std::string file = std::filesystem::path(path).filename().string();
  std::smatch m;
  if (std::regex_match(file, m, kPair)) return {m[1].str(), m[2].str()};
  return {"", ""};
}

void WriteMuse(const BilingualDictionary& dict, std::ostream& out) {
  for (const auto& [source, translations] : dict.entries()) {
    for (const std::string& t : translations) out << source << '\t' << t << '\n';
  }
}

BilingualDictionary ComposePivot(const BilingualDictionary& x_to_pivot,
                                 const BilingualDictionary& pivot_to_y) {
  if (x_to_pivot.tgt_lang() != pivot_to_y.src_lang()) {
    throw Error("cannot compose " + x_to_pivot.src_lang() + "-" +
                x_to_pivot.tgt_lang() + " with " + pivot_to_y.src_lang() + "-" +
                pivot_to_y.tgt_lang() + ": pivot languages differ");
  }
  BilingualDictionary out(x_to_pivot.src_lang(), pivot_to_y.tgt_lang());
  for (const auto& [source, pivots] : x_to_pivot.entries()) {
    for (const std::string& pivot : pivots) {
      const std::vector<std::string>* targets =
          pivot_to_y.Find(utf8::FoldCase(pivot));
      if (targets == nullptr) continue;
      for (const std::string& y : *targets) out.Add(source, y);
    }
  }
  return out;
}

double Coverage(const BilingualDictionary& dict, const Corpus& corpus) {
  uint64_t covered = 0;
  uint64_t total = 0;
  for (const Paragraph& p : corpus.paragraphs) {
    for (const Sentence& s : p.sentences) {
      for (const Token& t : s.tokens) {
        ++total;
        if (dict.Contains(t.surface)) ++covered;
      }
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(total);
}

}  // namespace codemix
