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

#ifndef ACENLS_TOKENIZER_H_
#define ACENLS_TOKENIZER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acenls/error.h"
#include "acenls/lexicon.h"

namespace acenls {

enum class TokenKind {
  kFunctionWord,
  kFixedPhrase,
  kContentWord,
  kNumber,
  kProperName,
  kComma,
  kTerminator,
};

std::string_view TokenKindName(TokenKind kind);

struct Token {
  std::string surface;  // as written
  TokenKind kind = TokenKind::kProperName;
  std::size_t offset = 0;  // byte offset in the tokenized text

  // kFunctionWord and kFixedPhrase: lower-cased phrase.
  std::string phrase;
  FunctionRole role = FunctionRole::kDeterminer;

  // kContentWord.
  Category category = Category::kNoun;
  std::string lexeme;
  GrammaticalNumber number = GrammaticalNumber::kSingular;

  // kNumber.
  std::int64_t value = 0;

  bool IsFunction(FunctionRole r) const {
    return kind == TokenKind::kFunctionWord && role == r;
  }
  bool IsFunction(std::string_view lower_phrase) const {
    return kind == TokenKind::kFunctionWord && phrase == lower_phrase;
  }
  bool IsFixed(std::string_view lower_phrase) const {
    return kind == TokenKind::kFixedPhrase && phrase == lower_phrase;
  }
  bool IsContent(Category c) const {
    return kind == TokenKind::kContentWord && category == c;
  }
  bool IsContent(Category c, std::string_view lex) const {
    return IsContent(c) && lexeme == lex;
  }
  bool IsTerminator() const { return kind == TokenKind::kTerminator; }
};

// Splits `text` into tokens. At each position the longest fixed phrase wins,
// then the longest function word, then a content word, a number, and finally
// a proper name: a registered model identifier, a capitalized word, or the
// first word of a sentence. '.' and '?' are terminators; ',' is a separate
// token. Throws Error(kUnknownToken) at the first word that fits no class;
// its location column is the 1-based offset in `text`.
std::vector<Token> Tokenize(std::string_view text, const Lexicon& lexicon);

// One sentence of a longer text. Either `tokens` (ending in a terminator
// unless the text ended without one) or `error` is set.
struct TokenizedSentence {
  std::string text;
  std::size_t offset = 0;
  std::vector<Token> tokens;
  std::optional<Error> error;
};

// Tokenizes sentence by sentence so an unknown word only spoils its own
// sentence.
std::vector<TokenizedSentence> TokenizeSentences(std::string_view text,
                                                 const Lexicon& lexicon);

// Joins surfaces with single spaces; commas and terminators attach to the
// preceding token, as does the genitive marker.
std::string JoinTokens(std::span<const Token> tokens);

}  // namespace acenls

#endif  // ACENLS_TOKENIZER_H_
