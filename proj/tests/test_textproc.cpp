// Copyright 2026 The lemlev Authors.
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

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lemlev/textproc.hpp"
#include "support/docgen.hpp"

namespace lemlev {
namespace {

std::size_t count_kind(const std::vector<Token>& tokens, TokenKind kind) {
  std::size_t n = 0;
  for (const auto& t : tokens) n += t.kind == kind;
  return n;
}

TEST(Tokenize, ThreeArabicWords) {
  const auto tokens = tokenize("كتب في البيت");
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(count_kind(tokens, TokenKind::Word), 3u);
  EXPECT_EQ(count_kind(tokens, TokenKind::NonWord), 2u);
  EXPECT_EQ(tokens[0].surface, "كتب");
  EXPECT_EQ(tokens[0].start, 0u);
  EXPECT_EQ(tokens[0].end, 3u);
  EXPECT_EQ(tokens[4].surface, "البيت");
  EXPECT_EQ(tokens[4].start, 7u);
}

TEST(Tokenize, EmptyInput) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, NoArabicLetters) {
  const auto tokens = tokenize("abc 123");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(count_kind(tokens, TokenKind::NonWord), 3u);
  EXPECT_EQ(tokens[0].surface, "abc");
  EXPECT_EQ(tokens[1].surface, " ");
  EXPECT_EQ(tokens[2].surface, "123");
}

TEST(Tokenize, DiacriticsAndTatweelStayInsideWords) {
  const auto tokens = tokenize("فَرْد بيـــت");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].surface, "فَرْد");
  EXPECT_EQ(tokens[0].end, 5u);
  EXPECT_EQ(tokens[2].surface, "بيـــت");
}

TEST(Tokenize, PunctuationSplitsFromWords) {
  const auto tokens = tokenize("كتب،البيت؟");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_TRUE(tokens[0].is_word());
  EXPECT_EQ(tokens[1].surface, "،");
  EXPECT_TRUE(tokens[2].is_word());
  EXPECT_EQ(tokens[3].surface, "؟");
}

TEST(Tokenize, ArabicIndicDigitsAreNotWords) {
  const auto tokens = tokenize("٢٠٢٢");
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_FALSE(tokens[0].is_word());
}

TEST(Tokenize, MarkupRunJoinsFollowingWord) {
  const auto tokens = tokenize("#٥#كتب و#5#بيت");
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[0].surface, "#٥#كتب");
  EXPECT_EQ(tokens[0].markup_len, 3u);
  EXPECT_EQ(tokens[0].body(), "كتب");
  EXPECT_EQ(tokens[0].body_start(), 3u);
  // The run after و follows a word character: it does not bind, and و stays a word.
  EXPECT_EQ(tokens[2].surface, "و");
  EXPECT_EQ(tokens[3].surface, "#5#");
  EXPECT_FALSE(tokens[3].is_word());
  EXPECT_EQ(tokens[4].surface, "بيت");
}

TEST(Tokenize, RunNotFollowedByWordIsNonWord) {
  const auto tokens = tokenize("#5# كتب");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].surface, "#5#");
  EXPECT_FALSE(tokens[0].is_word());
}

TEST(Tokenize, RunAfterHashDoesNotBind) {
  const auto tokens = tokenize("#1##5#كتب");
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0].surface, "#1##5#");
  EXPECT_EQ(tokens[1].surface, "كتب");
  EXPECT_EQ(tokens[1].markup_len, 0u);
}

TEST(Tokenize, InvalidUtf8Throws) {
  EXPECT_THROW(tokenize("\xff\xfe"), utf8::DecodeError);
}

// Tokens partition the source: ordered, adjacent and lossless.
TEST(TokenizeProperty, PartitionsSource) {
  lemlev_test::DocGenerator gen(7);
  std::mt19937 rng(11);
  const std::u32string alphabet = U"ابتكفردهاَُِّْـ #5٥ab,،\n";
  for (int iter = 0; iter < 500; ++iter) {
    std::string text = gen.next().clean;
    // Mix in random character soup.
    std::u32string soup;
    for (int k = std::uniform_int_distribution<int>(0, 20)(rng); k > 0; --k) {
      soup.push_back(alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)]);
    }
    text += utf8::encode(soup);
    const auto tokens = tokenize(text);
    std::string rebuilt;
    std::size_t pos = 0;
    for (const auto& t : tokens) {
      ASSERT_EQ(t.start, pos);
      ASSERT_LT(t.start, t.end);
      rebuilt += t.surface;
      pos = t.end;
    }
    EXPECT_EQ(pos, utf8::length(text));
    EXPECT_EQ(rebuilt, text);
  }
}

TEST(Normalize, StripDiacritics) {
  const NormProfile p(true, false, false, false, false);
  EXPECT_EQ(normalize("فَرْد", p), "فرد");
}

TEST(Normalize, FixedPointUnderAllFlags) {
  EXPECT_EQ(normalize("كتب", NormProfile::fuzzy()), "كتب");
}

TEST(Normalize, DiacriticsPlusAlef) {
  const NormProfile p(true, false, true, false, false);
  EXPECT_EQ(normalize("أَحْمَد", p), "احمد");
}

TEST(Normalize, IndividualRules) {
  EXPECT_EQ(normalize("بيـــت", NormProfile(false, true, false, false, false)), "بيت");
  EXPECT_EQ(normalize("إآٱأ", NormProfile(false, false, true, false, false)), "اااا");
  EXPECT_EQ(normalize("على", NormProfile(false, false, false, true, false)), "علي");
  EXPECT_EQ(normalize("رئة", NormProfile(false, false, false, false, true)), "رئه");
  EXPECT_EQ(normalize("مِصْرٰ", NormProfile::lookup()), "مصر");
}

TEST(Normalize, DefaultLookupProfileKeepsLetters) {
  EXPECT_EQ(normalize("أَكَلَ", NormProfile::lookup()), "أكل");
  EXPECT_EQ(profile_by_name("default"), NormProfile::lookup());
  EXPECT_EQ(profile_by_name("fuzzy"), NormProfile::fuzzy());
  EXPECT_THROW(profile_by_name("loud"), std::invalid_argument);
}

TEST(NormalizeProperty, IdempotentAndNonIncreasing) {
  std::mt19937 rng(3);
  const std::u32string alphabet = U"اأإآٱىيةهبتـَُِّْٰ ab";
  for (int iter = 0; iter < 2000; ++iter) {
    std::u32string s;
    for (int k = std::uniform_int_distribution<int>(0, 16)(rng); k > 0; --k) {
      s.push_back(alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)]);
    }
    const unsigned bits = std::uniform_int_distribution<unsigned>(0, 31)(rng);
    const NormProfile p(bits & 1, bits & 2, bits & 4, bits & 8, bits & 16);
    const std::string x = utf8::encode(s);
    const std::string once = normalize(x, p);
    EXPECT_EQ(normalize(once, p), once);
    EXPECT_LE(utf8::length(once), utf8::length(x));
  }
}

}  // namespace
}  // namespace lemlev
