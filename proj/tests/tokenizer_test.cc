// Copyright 2026 The acenls Authors.
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


#include "acenls/tokenizer.h"

#include <gtest/gtest.h>

#include "acenls/generator.h"
#include "support/random-model.h"

namespace acenls {
namespace {

std::vector<TokenKind> Kinds(const std::vector<Token>& tokens) {
  std::vector<TokenKind> out;
  for (const Token& t : tokens) out.push_back(t.kind);
  return out;
}

TEST(TokenizeTest, DatatypeDeclaration) {
  const std::vector<Token> t = Tokenize("Signal is a datatype.", Lexicon::Default());
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(Kinds(t), (std::vector<TokenKind>{
                          TokenKind::kProperName, TokenKind::kFunctionWord,
                          TokenKind::kFunctionWord, TokenKind::kContentWord,
                          TokenKind::kTerminator}));
  EXPECT_EQ(t[0].surface, "Signal");
  EXPECT_TRUE(t[1].IsFunction(FunctionRole::kBe));
  EXPECT_TRUE(t[2].IsFunction(FunctionRole::kDeterminer));
  EXPECT_TRUE(t[3].IsContent(Category::kNoun, "DATATYPE"));
  EXPECT_EQ(t[4].surface, ".");
  EXPECT_EQ(t[3].offset, 12u);
}

TEST(TokenizeTest, FixedPhraseIsOneToken) {
  const std::vector<Token> t =
      Tokenize("it is true that Signal is a datatype.", Lexicon::Default());
  ASSERT_FALSE(t.empty());
  EXPECT_EQ(t[0].kind, TokenKind::kFixedPhrase);
  EXPECT_EQ(t[0].surface, "it is true that");
  EXPECT_EQ(t[1].surface, "Signal");

  const std::vector<Token> there =
      Tokenize("There is a transition from Red to Green.", Lexicon::Default());
  EXPECT_TRUE(there[0].IsFixed("there is"));
}

TEST(TokenizeTest, UnknownLowercaseWord) {
  try {
    Tokenize("xyzzy flurble.", Lexicon::Default());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownToken);
    ASSERT_TRUE(e.location());
    EXPECT_EQ(e.location()->column, 7u);
    EXPECT_NE(e.message().find("flurble"), std::string::npos);
  }
}

TEST(TokenizeTest, NumbersAndPunctuation) {
  const std::vector<Token> t =
      Tokenize("It consists-of 2 elements that are Off, On.", Lexicon::Default());
  ASSERT_EQ(t.size(), 10u);
  EXPECT_EQ(t[2].kind, TokenKind::kNumber);
  EXPECT_EQ(t[2].value, 2);
  EXPECT_EQ(t[3].number, GrammaticalNumber::kPlural);
  EXPECT_EQ(t[7].kind, TokenKind::kComma);
  EXPECT_EQ(Tokenize("It is equal to -5.", Lexicon::Default())[4].value, -5);
}

TEST(TokenizeTest, RegisteredNamesAndUnhyphenatedWords) {
  const Lexicon lex = Lexicon::Default().WithProperName("tRed");
  const std::vector<Token> t =
      Tokenize("The initial state is tRed.", lex);
  EXPECT_EQ(t[4].kind, TokenKind::kProperName);
  EXPECT_THROW(Tokenize("The initial state is tRed.", Lexicon::Default()), Error);
  try {
    Tokenize("Lamp is interested in Signal.", Lexicon::Default()
                                                  .Register("interested-in",
                                                            Category::kAdjective));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownToken);
    EXPECT_NE(e.message().find("interested-in"), std::string::npos);
  }
}

TEST(TokenizeSentencesTest, ErrorsStayInTheirSentence) {
  const std::vector<TokenizedSentence> s = TokenizeSentences(
      "Signal is a datatype. flurble is x. It consists-of one element that is "
      "Present.",
      Lexicon::Default());
  ASSERT_EQ(s.size(), 3u);
  EXPECT_FALSE(s[0].error);
  EXPECT_TRUE(s[1].error);
  EXPECT_FALSE(s[2].error);
  EXPECT_EQ(s[2].tokens.back().surface, ".");
}

// Joining token surfaces reproduces every generated sentence.
TEST(TokenizePropertyTest, TokenizeDetokenizeOverGeneratedCorpus) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Model m = testing::RandomModel(seed);
    const Document doc = GenerateDocument(m, Lexicon::Default(), AllSections());
    for (const Sentence* s : doc.flat_sentences()) {
      const std::vector<Token> tokens = Tokenize(s->text, doc.lexicon);
      EXPECT_EQ(JoinTokens(tokens), s->text) << "seed " << seed;
    }
  }
}

}  // namespace
}  // namespace acenls
