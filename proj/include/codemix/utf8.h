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

#ifndef CODEMIX_UTF8_H_
#define CODEMIX_UTF8_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace codemix {
namespace utf8 {

// Decodes the code point starting at text[*pos] and advances *pos past it.
// Returns nullopt (and leaves *pos untouched) on malformed input, including
// overlong forms, surrogates and values above U+10FFFF.
std::optional<char32_t> DecodeNext(std::string_view text, size_t* pos);

bool IsValid(std::string_view text);

void Append(char32_t code_point, std::string* out);

// Unicode White_Space property.
bool IsWhitespace(char32_t code_point);

// Splits on any run of whitespace code points. Input must be valid UTF-8.
std::vector<std::string> SplitWhitespace(std::string_view text);

bool ContainsWhitespace(std::string_view text);

// Simple lower-case folding for ASCII, Latin-1, Latin Extended-A, Greek and
// Cyrillic. Everything else (including caseless scripts such as Thai) is
// copied through unchanged. Locale independent.
std::string FoldCase(std::string_view text);

// Sentence-terminal characters: . ! ? and U+2026 HORIZONTAL ELLIPSIS.
bool EndsWithTerminal(std::string_view word);

// Splits a word into its body and the run of trailing . , ! ? U+2026
// characters. "dog." -> {"dog", "."}; "..." -> {"", "..."}.
struct PunctSplit {
  std::string_view body;
  std::string_view suffix;
};
PunctSplit SplitTrailingPunct(std::string_view word);

}  // namespace utf8
}  // namespace codemix

#endif  // CODEMIX_UTF8_H_
