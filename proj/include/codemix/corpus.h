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

#ifndef CODEMIX_CORPUS_H_
#define CODEMIX_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace codemix {

struct Token {
  std::string surface;
  // Position within the owning paragraph.
  size_t index = 0;

  bool operator==(const Token&) const = default;
};

// Sentence covering paragraph token positions [begin, end).
struct Sentence {
  std::vector<Token> tokens;
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return tokens.size(); }
  bool operator==(const Sentence&) const = default;
};

struct Paragraph {
  std::vector<Sentence> sentences;
  // 1-based line number in the source file.
  uint64_t doc_id = 0;

  size_t TokenCount() const;
  // All tokens in original order.
  std::vector<Token> Tokens() const;
  // Surfaces joined with single spaces.
  std::string Text() const;

  bool operator==(const Paragraph&) const = default;
};

struct Corpus {
  std::vector<Paragraph> paragraphs;
  std::string language_tag;

  size_t size() const { return paragraphs.size(); }
  bool empty() const { return paragraphs.empty(); }
  uint64_t TokenCount() const;
};

using SentenceSplitter =
    std::function<std::vector<Sentence>(std::span<const Token>)>;

// Boundary after every token ending in . ! ? or an ellipsis. Spans partition
// the input; an input with no terminal token is a single sentence.
std::vector<Sentence> SplitSentences(std::span<const Token> tokens);

enum class InvalidUtf8Policy { kAbort, kSkip };

struct LoadOptions {
  // Shell command run over the corpus lines (stdin in, stdout out, one line
  // per line) before whitespace tokenization.
  std::optional<std::string> pretokenizer;
  InvalidUtf8Policy invalid_utf8 = InvalidUtf8Policy::kAbort;
  SentenceSplitter splitter = SplitSentences;
  std::string language_tag;
};

struct LoadStats {
  uint64_t lines = 0;
  uint64_t blank_lines = 0;
  uint64_t invalid_lines = 0;
};

// Builds a paragraph from one line of text; returns nullopt for lines with
// no tokens.
std::optional<Paragraph> MakeParagraph(
    std::string_view line, uint64_t doc_id,
    const SentenceSplitter& splitter = SplitSentences);

Corpus ReadCorpus(std::istream& in, const LoadOptions& options = {},
                  LoadStats* stats = nullptr, const std::string& name = "<stream>");

// One paragraph per non-blank line. Throws ParseError on invalid UTF-8 under
// kAbort, Error when the pretokenizer fails.
Corpus LoadCorpus(const std::string& path, const LoadOptions& options = {},
                  LoadStats* stats = nullptr);

// Runs `command` through /bin/sh with `lines` on stdin and returns its stdout
// lines. Throws Error carrying the command's stderr on nonzero exit or when
// the output line count differs from the input.
std::vector<std::string> RunPretokenizer(const std::string& command,
                                         const std::vector<std::string>& lines);

// Uniform sample of n paragraphs without replacement, original order kept.
// n >= corpus size returns the whole corpus.
Corpus SampleParagraphs(const Corpus& corpus, size_t n, uint64_t seed);

void WriteCorpus(const Corpus& corpus, std::ostream& out);

}  // namespace codemix

#endif  // CODEMIX_CORPUS_H_
