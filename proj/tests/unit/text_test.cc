// Copyright 2026 The Affect Audit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "affect_audit/text.h"

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace affect_audit {
namespace {

using ::testing::ElementsAre;

std::vector<std::string> Sentences(std::string_view text) {
  std::vector<std::string> out;
  for (std::string_view s : SegmentSentences(text)) out.emplace_back(s);
  return out;
}

TEST(SegmentSentencesTest, SplitsOnTerminators) {
  EXPECT_EQ(Sentences("A. B! C?"), (std::vector<std::string>{"A.", "B!", "C?"}));
}

TEST(SegmentSentencesTest, EmptyInput) { EXPECT_TRUE(SegmentSentences("").empty()); }

TEST(SegmentSentencesTest, AbbreviationGuard) {
  EXPECT_EQ(Sentences("Mr. Smith left. He ran."),
            (std::vector<std::string>{"Mr. Smith left.", "He ran."}));
  EXPECT_EQ(Sentences("We met Dr. Who at St. Paul's."),
            (std::vector<std::string>{"We met Dr. Who at St. Paul's."}));
}

TEST(SegmentSentencesTest, NewlinesAndClosers) {
  EXPECT_EQ(Sentences("one\ntwo three\n\n"), (std::vector<std::string>{"one", "two three"}));
  EXPECT_EQ(Sentences("He said \"stop!\" Then left."),
            (std::vector<std::string>{"He said \"stop!\"", "Then left."}));
  EXPECT_EQ(Sentences("Wait... what?! Ok"),
            (std::vector<std::string>{"Wait...", "what?!", "Ok"}));
}

TEST(SegmentSentencesTest, DecimalsDoNotSplit) {
  EXPECT_EQ(Sentences("It costs 3.50 today. Fine."),
            (std::vector<std::string>{"It costs 3.50 today.", "Fine."}));
}

TEST(SegmentSentencesTest, LosesOnlyInterSentenceWhitespace) {
  std::mt19937_64 rng(7);
  const std::string_view alphabet = "ab .!?\n\"";
  for (int iter = 0; iter < 2000; ++iter) {
    std::string text;
    const size_t n = rng() % 40;
    for (size_t i = 0; i < n; ++i) text.push_back(alphabet[rng() % alphabet.size()]);
    std::string joined;
    for (std::string_view s : SegmentSentences(text)) joined += s;
    std::string stripped;
    for (char c : text) {
      if (c != ' ' && c != '\n') stripped.push_back(c);
    }
    std::string joined_stripped;
    for (char c : joined) {
      if (c != ' ' && c != '\n') joined_stripped.push_back(c);
    }
    EXPECT_EQ(joined_stripped, stripped) << "input: " << text;
  }
}

TEST(TokenizeTest, SpecExamples) {
  EXPECT_THAT(Tokenize("White-man's dog!"), ElementsAre("white-man's", "dog"));
  EXPECT_THAT(Tokenize("ma’am"), ElementsAre("ma'am"));
  EXPECT_THAT(Tokenize("a  b"), ElementsAre("a", "b"));
}

TEST(TokenizeTest, CaseFoldingAndSeparators) {
  EXPECT_THAT(Tokenize("The THE tHe"), ElementsAre("the", "the", "the"));
  EXPECT_THAT(Tokenize("x,y;z(w)"), ElementsAre("x", "y", "z", "w"));
  EXPECT_THAT(Tokenize("'happy' -sad-"), ElementsAre("happy", "sad"));
  EXPECT_THAT(Tokenize("route 66"), ElementsAre("route", "66"));
  EXPECT_THAT(Tokenize("café — naïve"), ElementsAre("café", "naïve"));
  EXPECT_TRUE(Tokenize(" -- ' ").empty());
}

TEST(TokenizeTest, InvalidUtf8IsASeparator) {
  EXPECT_THAT(Tokenize("sad\xff" "happy"), ElementsAre("sad", "happy"));
  std::string repaired;
  EXPECT_EQ(RepairUtf8("ok\xc3", &repaired), 1u);
  EXPECT_EQ(RepairUtf8("ok é", nullptr), 0u);
}

TEST(TokenizeTest, HeDoesNotMatchInsideThe) {
  for (const std::string& t : Tokenize("the other theme")) EXPECT_NE(t, "he");
}

TEST(NormalizeTermTest, SingleTokenOnly) {
  EXPECT_EQ(NormalizeTerm("Ma’am"), "ma'am");
  EXPECT_EQ(NormalizeTerm("two words"), "");
  EXPECT_EQ(NormalizeTerm(""), "");
}

}  // namespace
}  // namespace affect_audit
