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

#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace codemix {
namespace {

using ::std::string;
using ::std::vector;

TEST(Utf8Test, SplitsOnUnicodeWhitespace) {
  EXPECT_EQ(utf8::SplitWhitespace("  a\tb \xC2\xA0 c\xE3\x80\x80" "d "),
            (vector<string>{"a", "b", "c", "d"}));
  EXPECT_TRUE(utf8::SplitWhitespace(" \t ").empty());
}

TEST(Utf8Test, RejectsMalformedSequences) {
  EXPECT_TRUE(utf8::IsValid("kucing \xE0\xB8\x81"));
  EXPECT_FALSE(utf8::IsValid("\xC0\xAF"));          // overlong '/'
  EXPECT_FALSE(utf8::IsValid("\xED\xA0\x80"));      // surrogate
  EXPECT_FALSE(utf8::IsValid("\xF4\x90\x80\x80"));  // above U+10FFFF
  EXPECT_FALSE(utf8::IsValid("abc\xE2\x80"));       // truncated
}

TEST(Utf8Test, FoldsCommonScripts) {
  EXPECT_EQ(utf8::FoldCase("Dog"), "dog");
  EXPECT_EQ(utf8::FoldCase("\xC3\x89T\xC3\x89"), "\xC3\xA9t\xC3\xA9");  // ÉTÉ
  EXPECT_EQ(utf8::FoldCase("\xD0\x9C\xD0\xBE\xD1\x81\xD0\xBA\xD0\xB2\xD0\xB0"),
            "\xD0\xBC\xD0\xBE\xD1\x81\xD0\xBA\xD0\xB2\xD0\xB0");  // Москва
  EXPECT_EQ(utf8::FoldCase("\xCE\xA9"), "\xCF\x89");            // Ω
  EXPECT_EQ(utf8::FoldCase("\xC5\x81\xC3\xB3" "d\xC5\xBA"),
            "\xC5\x82\xC3\xB3" "d\xC5\xBA");  // Łódź
  // Thai has no case.
  EXPECT_EQ(utf8::FoldCase("\xE0\xB8\x81\xE0\xB8\x82"), "\xE0\xB8\x81\xE0\xB8\x82");
}

TEST(Utf8Test, SplitsTrailingPunctuation) {
  auto parts = utf8::SplitTrailingPunct("makan.");
  EXPECT_EQ(parts.body, "makan");
  EXPECT_EQ(parts.suffix, ".");

  parts = utf8::SplitTrailingPunct("ya?!\xE2\x80\xA6");
  EXPECT_EQ(parts.body, "ya");
  EXPECT_EQ(parts.suffix, "?!\xE2\x80\xA6");

  parts = utf8::SplitTrailingPunct("...");
  EXPECT_EQ(parts.body, "");

  parts = utf8::SplitTrailingPunct("U.S.A");
  EXPECT_EQ(parts.body, "U.S.A");
  EXPECT_EQ(parts.suffix, "");
}

TEST(Utf8Test, TerminalPunctuation) {
  EXPECT_TRUE(utf8::EndsWithTerminal("b."));
  EXPECT_TRUE(utf8::EndsWithTerminal("d?"));
  EXPECT_TRUE(utf8::EndsWithTerminal("x!"));
  EXPECT_TRUE(utf8::EndsWithTerminal("wait\xE2\x80\xA6"));
  EXPECT_FALSE(utf8::EndsWithTerminal("a,"));
  EXPECT_FALSE(utf8::EndsWithTerminal(""));
}

}  // namespace
}  // namespace codemix
