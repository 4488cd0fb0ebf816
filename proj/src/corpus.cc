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

#include "codemix/corpus.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

#include "codemix/error.h"
#include "codemix/rng.h"
#include "codemix/utf8.h"

namespace codemix {
namespace {

// Salt mixed into the sampling seed so it never shares a stream with
// per-paragraph corruption under the same seed.
constexpr uint64_t kSampleStreamId = 0x73616D706C65ULL;  // "sample"

class TempFile {
 public:
  TempFile() {
    std::string pattern =
        (std::filesystem::temp_directory_path() / "codemix-XXXXXX").string();
    const int fd = mkstemp(pattern.data());
    if (fd < 0) throw Error("cannot create temporary file");
    close(fd);
    path_ = pattern;
  }
  ~TempFile() {
    std::error_code ignored;
    std::filesystem::remove(path_, ignored);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string ReadAll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

size_t Paragraph::TokenCount() const {
  size_t n = 0;
  for (const Sentence& s : sentences) n += s.tokens.size();
  return n;
}

std::vector<Token> Paragraph::Tokens() const {
  std::vector<Token> out;
  out.reserve(TokenCount());
  for (const Sentence& s : sentences) {
    out.insert(out.end(), s.tokens.begin(), s.tokens.end());
  }
  return out;
}

std::string Paragraph::Text() const {
  std::string out;
  for (const Sentence& s : sentences) {
    for (const Token& t : s.tokens) {
      if (!out.empty()) out.push_back(' ');
      out += t.surface;
    }
  }
  return out;
}

uint64_t Corpus::TokenCount() const {
  uint64_t n = 0;
  for (const Paragraph& p : paragraphs) n += p.TokenCount();
  return n;
}

std::vector<Sentence> SplitSentences(std::span<const Token> tokens) {
  std::vector<Sentence> sentences;
  size_t begin = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const bool last = i + 1 == tokens.size();
    if (last || utf8::EndsWithTerminal(tokens[i].surface)) {
      Sentence s;
      s.begin = begin;
      s.end = i + 1;
      s.tokens.assign(tokens.begin() + begin, tokens.begin() + i + 1);
      sentences.push_back(std::move(s));
      begin = i + 1;
    }
  }
  return sentences;
}

std::optional<Paragraph> MakeParagraph(std::string_view line, uint64_t doc_id,
                                       const SentenceSplitter& splitter) {
  std::vector<std::string> words = utf8::SplitWhitespace(line);
  if (words.empty()) return std::nullopt;
  std::vector<Token> tokens;
  tokens.reserve(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    tokens.push_back(Token{std::move(words[i]), i});
  }
  Paragraph p;
  p.doc_id = doc_id;
  p.sentences = splitter(tokens);
  return p;
}

std::vector<std::string> RunPretokenizer(const std::string& command,
                                         const std::vector<std::string>& lines) {
  TempFile in_file;
  TempFile out_file;
  TempFile err_file;
  {
    std::ofstream in(in_file.path(), std::ios::binary);
    for (const std::string& line : lines) in << line << '\n';
    if (!in) throw Error("cannot write pretokenizer input");
  }
  const std::string shell = "(" + command + ") <'" + in_file.path() + "' >'" +
                            out_file.path() + "' 2>'" + err_file.path() + "'";
  const int status = std::system(shell.c_str());
  if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    const int code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    throw Error("pretokenizer '" + command + "' failed with exit status " +
                std::to_string(code) + ": " + ReadAll(err_file.path()));
  }
  std::vector<std::string> result;
  std::istringstream out(ReadAll(out_file.path()));
  std::string line;
  while (std::getline(out, line)) result.push_back(line);
  if (result.size() != lines.size()) {
    throw Error("pretokenizer '" + command + "' produced " +
                std::to_string(result.size()) + " lines for " +
                std::to_string(lines.size()) + " input lines");
  }
  return result;
}

Corpus ReadCorpus(std::istream& in, const LoadOptions& options,
                  LoadStats* stats, const std::string& name) {
  LoadStats local;
  std::vector<std::string> lines;
  std::vector<uint64_t> line_numbers;
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!utf8::IsValid(line)) {
      if (options.invalid_utf8 == InvalidUtf8Policy::kAbort) {
        throw ParseError(name, line_no, "invalid UTF-8");
      }
      ++local.invalid_lines;
      continue;
    }
    if (utf8::SplitWhitespace(line).empty()) {
      ++local.blank_lines;
      continue;
    }
    lines.push_back(std::move(line));
    line_numbers.push_back(line_no);
  }
  local.lines = line_no;

  if (options.pretokenizer && !lines.empty()) {
    lines = RunPretokenizer(*options.pretokenizer, lines);
  }

  Corpus corpus;
  corpus.language_tag = options.language_tag;
  corpus.paragraphs.reserve(lines.size());
  for (size_t i = 0; i < lines.size(); ++i) {
    if (options.pretokenizer && !utf8::IsValid(lines[i])) {
      throw ParseError(name, line_numbers[i], "pretokenizer emitted invalid UTF-8");
    }
    auto p = MakeParagraph(lines[i], line_numbers[i], options.splitter);
    if (p) {
      corpus.paragraphs.push_back(std::move(*p));
    } else {
      ++local.blank_lines;
    }
  }
  if (stats) *stats = local;
  return corpus;
}

Corpus LoadCorpus(const std::string& path, const LoadOptions& options,
                  LoadStats* stats) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus " + path);
  return ReadCorpus(in, options, stats, path);
}

Corpus SampleParagraphs(const Corpus& corpus, size_t n, uint64_t seed) {
  if (n >= corpus.size()) return corpus;
  RandomStream rng = DeriveStream(seed, kSampleStreamId);
  std::vector<size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), size_t{0});
  // Partial Fisher-Yates: the first n slots become a uniform n-subset.
  for (size_t i = 0; i < n; ++i) {
    const size_t j = i + rng.UniformBelow(order.size() - i);
    std::swap(order[i], order[j]);
  }
  order.resize(n);
  std::sort(order.begin(), order.end());
  Corpus out;
  out.language_tag = corpus.language_tag;
  out.paragraphs.reserve(n);
  for (size_t idx : order) out.paragraphs.push_back(corpus.paragraphs[idx]);
  return out;
}

void WriteCorpus(const Corpus& corpus, std::ostream& out) {
  for (const Paragraph& p : corpus.paragraphs) out << p.Text() << '\n';
}

}  // namespace codemix
