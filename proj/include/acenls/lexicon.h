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

// Vocabulary of the controlled English subset.
//
// Function words and fixed phrases form closed classes compiled into the
// library; nothing can add or remove them. Content words (nouns, verbs,
// adjectives, adverbs, prepositions) live in a per-lexicon registry that
// users extend, one blank-free surface form at a time. Model identifiers
// are registered separately as proper names.
//
// A Lexicon is a value: registration returns a new lexicon and never
// modifies the receiver, so a finished lexicon can be shared freely.

#ifndef ACENLS_LEXICON_H_
#define ACENLS_LEXICON_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "acenls/error.h"

namespace acenls {

enum class FunctionRole {
  kDeterminer,
  kQuantifier,
  kCoordinator,
  kNegation,
  kPronoun,
  kQueryWord,
  kModal,
  kAuxiliary,  // do/does in questions
  kBe,
  kGenitive,   // Saxon genitive marker
  kResponse,   // "yes" in short answers
};

std::string_view FunctionRoleName(FunctionRole role);

enum class Category { kNoun, kVerb, kAdjective, kAdverb, kPreposition };

std::string_view CategoryName(Category category);
// Accepts the lexicon-file spellings noun|verb|adj|adv|prep.
std::optional<Category> ParseCategory(std::string_view text);

// Plural for nouns; for verbs, kPlural marks the infinitive ("have" as
// opposed to "has").
enum class GrammaticalNumber { kSingular, kPlural };

struct FunctionWord {
  std::string_view phrase;  // lower case, words separated by one space
  FunctionRole role;
};

struct ContentWord {
  std::string surface;
  Category category = Category::kNoun;
  std::string lexeme;
  GrammaticalNumber number = GrammaticalNumber::kSingular;

  friend bool operator==(const ContentWord&, const ContentWord&) = default;
};

// Canonical lexemes of the built-in content words.
namespace lexeme {
inline constexpr std::string_view kDatatype = "DATATYPE";
inline constexpr std::string_view kConstant = "CONSTANT";
inline constexpr std::string_view kElement = "ELEMENT";
inline constexpr std::string_view kComponent = "COMPONENT";
inline constexpr std::string_view kPort = "PORT";
inline constexpr std::string_view kChannel = "CHANNEL";
inline constexpr std::string_view kState = "STATE";
inline constexpr std::string_view kStateAutomaton = "STATE-AUTOMATON";
inline constexpr std::string_view kTransition = "TRANSITION";
inline constexpr std::string_view kType = "TYPE";
inline constexpr std::string_view kInteger = "INTEGER";
inline constexpr std::string_view kBoolean = "BOOLEAN";
inline constexpr std::string_view kConsistsOf = "CONSISTS-OF";
inline constexpr std::string_view kConnects = "CONNECTS";
inline constexpr std::string_view kPerforms = "PERFORMS";
inline constexpr std::string_view kHave = "HAVE";
inline constexpr std::string_view kEqual = "EQUAL";
inline constexpr std::string_view kTriggeredBy = "TRIGGERED-BY";
inline constexpr std::string_view kInput = "INPUT";
inline constexpr std::string_view kOutput = "OUTPUT";
inline constexpr std::string_view kInitial = "INITIAL";
inline constexpr std::string_view kOf = "OF";
inline constexpr std::string_view kTo = "TO";
inline constexpr std::string_view kFrom = "FROM";
}  // namespace lexeme

class Lexicon {
 public:
  // The closed classes plus the content words the document templates use.
  static Lexicon Default();

  // The closed classes only.
  Lexicon() = default;

  // Registers `surface` as its own canonical lexeme (the surface in upper
  // case). Idempotent for an identical (surface, category) pair. Throws
  // Error with kBlankSpaceInContentWord, kFunctionWordCollision or
  // kCategoryConflict.
  Lexicon Register(std::string_view surface, Category category) const;
  Lexicon Register(std::string_view surface, Category category,
                   std::string_view lexeme,
                   GrammaticalNumber number = GrammaticalNumber::kSingular) const;

  // Registers a model identifier. Throws kInvalidName if the identifier
  // cannot be one token, kIdentifierCollision if it would be read as a
  // function word or a content word.
  Lexicon WithProperName(std::string_view name) const;

  // The error WithProperName would throw for `name`, or nullopt.
  std::optional<Error> CheckProperName(std::string_view name) const;

  // `phrase` is matched case-insensitively; words separated by one space.
  const FunctionWord* FindFunctionWord(std::string_view phrase) const;
  static bool IsFixedPhrase(std::string_view phrase);
  // True for single-word function words and words inside fixed phrases.
  static bool IsReservedWord(std::string_view word);

  const ContentWord* FindContentWord(std::string_view surface) const;
  bool IsProperName(std::string_view surface) const {
    return proper_names_.contains(surface);
  }

  static std::span<const FunctionWord> FunctionWords();
  static std::span<const std::string_view> FixedPhrases();
  // Longest function word or fixed phrase, in words.
  static std::size_t MaxPhraseWords();

  const std::map<std::string, ContentWord, std::less<>>& content_words() const {
    return content_words_;
  }
  const std::set<std::string, std::less<>>& proper_names() const {
    return proper_names_;
  }

 private:
  void RegisterInPlace(std::string_view surface, Category category,
                       std::string_view lexeme, GrammaticalNumber number);

  std::map<std::string, ContentWord, std::less<>> content_words_;
  std::set<std::string, std::less<>> proper_names_;
};

// Parses lexicon-file text (`<category> <surface> [<canonical-lexeme>]` per
// line, `#` comments) on top of `base`. Errors carry the line number.
Lexicon LoadLexicon(std::string_view text, const Lexicon& base);
Lexicon LoadLexiconFile(const std::string& path, const Lexicon& base);

// ASCII lower-casing, used for closed-class matching.
std::string ToLower(std::string_view text);

}  // namespace acenls

#endif  // ACENLS_LEXICON_H_
