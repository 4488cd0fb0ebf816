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

#include "codemix/utf8.h"

namespace codemix {
namespace utf8 {
namespace {

constexpr std::string_view kEllipsis = "\xE2\x80\xA6";

bool IsContinuation(unsigned char c) { return (c & 0xC0) == 0x80; }

char32_t FoldCodePoint(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 32;
  if (c < 0x80) return c;
  // Latin-1 Supplement, skipping the multiplication sign.
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  // Latin Extended-A: upper/lower pairs alternate, with a parity shift in
  // the U+0139..U+0148 and U+0179..U+017E blocks.
  if (c >= 0x100 && c <= 0x137) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x139 && c <= 0x148) return (c % 2 == 1) ? c + 1 : c;
  if (c >= 0x14A && c <= 0x177) return (c % 2 == 0) ? c + 1 : c;
  if (c == 0x178) return 0xFF;
  if (c >= 0x179 && c <= 0x17E) return (c % 2 == 1) ? c + 1 : c;
  // Greek.
  if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 32;
  if (c == 0x386) return 0x3AC;
  if (c >= 0x388 && c <= 0x38A) return c + 37;
  if (c == 0x38C) return 0x3CC;
  if (c == 0x38E || c == 0x38F) return c + 63;
  // Cyrillic.
  if (c >= 0x400 && c <= 0x40F) return c + 80;
  if (c >= 0x410 && c <= 0x42F) return c + 32;
  if (c >= 0x460 && c <= 0x4FF && c != 0x482 && !(c >= 0x483 && c <= 0x489)) {
    if (c >= 0x4C1 && c <= 0x4CE) return (c % 2 == 1) ? c + 1 : c;
    if (c == 0x4C0) return 0x4CF;
    return (c % 2 == 0) ? c + 1 : c;
  }
  return c;
}

bool IsTrailingPunct(char32_t c) {
  return c == '.' || c == ',' || c == '!' || c == '?' || c == 0x2026;
}

}  // namespace

std::optional<char32_t> DecodeNext(std::string_view text, size_t* pos) {
  size_t i = *pos;
  if (i >= text.size()) return std::nullopt;
  const auto b0 = static_cast<unsigned char>(text[i]);
  if (b0 < 0x80) {
    *pos = i + 1;
    return b0;
  }
  int length;
  char32_t cp;
  char32_t min_value;
  if ((b0 & 0xE0) == 0xC0) {
    length = 2;
    cp = b0 & 0x1F;
    min_value = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    length = 3;
    cp = b0 & 0x0F;
    min_value = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    length = 4;
    cp = b0 & 0x07;
    min_value = 0x10000;
  } else {
    return std::nullopt;
  }
  if (i + length > text.size()) return std::nullopt;
  for (int k = 1; k < length; ++k) {
    const auto b = static_cast<unsigned char>(text[i + k]);
    if (!IsContinuation(b)) return std::nullopt;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min_value || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return std::nullopt;
  }
  *pos = i + length;
  return cp;
}

bool IsValid(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size()) {
    if (!DecodeNext(text, &pos)) return false;
  }
  return true;
}

void Append(char32_t c, std::string* out) {
  if (c < 0x80) {
    out->push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (c >> 6)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (c >> 12)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (c >> 18)));
    out->push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

bool IsWhitespace(char32_t c) {
  switch (c) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> words;
  size_t pos = 0;
  size_t word_start = std::string_view::npos;
  while (pos < text.size()) {
    const size_t here = pos;
    auto cp = DecodeNext(text, &pos);
    if (!cp) {
      // Treat a stray byte as part of a word rather than losing it.
      pos = here + 1;
      if (word_start == std::string_view::npos) word_start = here;
      continue;
    }
    if (IsWhitespace(*cp)) {
      if (word_start != std::string_view::npos) {
        words.emplace_back(text.substr(word_start, here - word_start));
        word_start = std::string_view::npos;
      }
    } else if (word_start == std::string_view::npos) {
      word_start = here;
    }
  }
  if (word_start != std::string_view::npos) {
    words.emplace_back(text.substr(word_start));
  }
  return words;
}

bool ContainsWhitespace(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size()) {
    auto cp = DecodeNext(text, &pos);
    if (!cp) {
      ++pos;
      continue;
    }
    if (IsWhitespace(*cp)) return true;
  }
  return false;
}

std::string FoldCase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t here = pos;
    auto cp = DecodeNext(text, &pos);
    if (!cp) {
      out.push_back(text[here]);
      pos = here + 1;
      continue;
    }
    Append(FoldCodePoint(*cp), &out);
  }
  return out;
}

bool EndsWithTerminal(std::string_view word) {
  if (word.empty()) return false;
  const char last = word.back();
  if (last == '.' || last == '!' || last == '?') return true;
  return word.size() >= kEllipsis.size() &&
         word.substr(word.size() - kEllipsis.size()) == kEllipsis;
}

PunctSplit SplitTrailingPunct(std::string_view word) {
  size_t cut = word.size();
  while (cut > 0) {
    if (IsTrailingPunct(static_cast<unsigned char>(word[cut - 1]))) {
      --cut;
    } else if (cut >= kEllipsis.size() &&
               word.substr(cut - kEllipsis.size(), kEllipsis.size()) ==
                   kEllipsis) {
      cut -= kEllipsis.size();
    } else {
      break;
    }
  }
  return {word.substr(0, cut), word.substr(cut)};
}

}  // namespace utf8
}  // namespace codemix
