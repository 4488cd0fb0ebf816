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

#ifndef CODEMIX_DICTIONARY_H_
#define CODEMIX_DICTIONARY_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "codemix/corpus.h"

namespace codemix {

// Key used for every dictionary lookup: lower-cased, trailing . , ! ? and
// ellipsis removed.
std::string NormalizeWord(std::string_view word);

// Word-to-translations map with insertion-ordered iteration. Source words are
// stored folded to lower case; translations are kept verbatim, deduplicated,
// in the order they were first added.
class BilingualDictionary {
 public:
  using Entry = std::pair<std::string, std::vector<std::string>>;

  BilingualDictionary() = default;
  BilingualDictionary(std::string src_lang, std::string tgt_lang)
      : src_lang_(std::move(src_lang)), tgt_lang_(std::move(tgt_lang)) {}

  const std::string& src_lang() const { return src_lang_; }
  const std::string& tgt_lang() const { return tgt_lang_; }

  // Adds one (source, translation) pair. Returns false when the pair was
  // already present. Throws Error on empty words or translations containing
  // whitespace.
  bool Add(std::string_view source, std::string_view translation);

  // Exact lookup of an already-normalized key.
  const std::vector<std::string>* Find(std::string_view key) const;

  // Lookup after NormalizeWord. nullptr when absent.
  const std::vector<std::string>* Lookup(std::string_view word) const {
    return Find(NormalizeWord(word));
  }

  bool Contains(std::string_view word) const { return Lookup(word) != nullptr; }

  const std::vector<Entry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Number of (source, translation) pairs.
  size_t PairCount() const;

 private:
  std::string src_lang_;
  std::string tgt_lang_;
  std::vector<Entry> entries_;
  std::unordered_map<std::string, size_t> index_;
};

// Two whitespace-separated columns per non-blank line. Lines with any other
// field count raise ParseError with the line number.
BilingualDictionary ReadMuse(std::istream& in, std::string src_lang = "",
                             std::string tgt_lang = "",
                             const std::string& name = "<stream>");
BilingualDictionary ParseMuse(const std::string& path, std::string src_lang,
                              std::string tgt_lang);
// Language tags are taken from a leading "xx-yy" in the file name when
// present ("id-en.txt", "en-de.0-5000.txt"), otherwise left empty.
BilingualDictionary ParseMuse(const std::string& path);

std::pair<std::string, std::string> LanguagePairFromFilename(
    const std::string& path);

// One "source<TAB>translation" line per pair, in entry order.
void WriteMuse(const BilingualDictionary& dict, std::ostream& out);

// x -> y iff x -> e in x_to_pivot and e -> y in pivot_to_y for some e.
// Translations keep first-derivation order. Throws Error when
// x_to_pivot.tgt_lang() != pivot_to_y.src_lang().
BilingualDictionary ComposePivot(const BilingualDictionary& x_to_pivot,
                                 const BilingualDictionary& pivot_to_y);

// Fraction of token occurrences in the corpus that have an entry; 0 for an
// empty corpus.
double Coverage(const BilingualDictionary& dict, const Corpus& corpus);

}  // namespace codemix

#endif  // CODEMIX_DICTIONARY_H_
