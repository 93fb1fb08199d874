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

#include "acenls/lexicon.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "acenls/error.h"

namespace acenls {

namespace {

using R = FunctionRole;

constexpr std::array kFunctionWords = {
    FunctionWord{"a", R::kDeterminer},
    FunctionWord{"an", R::kDeterminer},
    FunctionWord{"the", R::kDeterminer},
    FunctionWord{"some", R::kDeterminer},
    FunctionWord{"every", R::kDeterminer},
    FunctionWord{"each", R::kDeterminer},
    FunctionWord{"all", R::kDeterminer},
    FunctionWord{"no", R::kDeterminer},

    FunctionWord{"one", R::kQuantifier},
    FunctionWord{"exactly", R::kQuantifier},
    FunctionWord{"at least", R::kQuantifier},
    FunctionWord{"at most", R::kQuantifier},
    FunctionWord{"more than", R::kQuantifier},
    FunctionWord{"less than", R::kQuantifier},

    FunctionWord{"and", R::kCoordinator},
    FunctionWord{"or", R::kCoordinator},

    FunctionWord{"not", R::kNegation},
    FunctionWord{"nothing", R::kNegation},
    FunctionWord{"nobody", R::kNegation},

    FunctionWord{"it", R::kPronoun},
    FunctionWord{"itself", R::kPronoun},
    FunctionWord{"they", R::kPronoun},
    FunctionWord{"them", R::kPronoun},
    FunctionWord{"he", R::kPronoun},
    FunctionWord{"she", R::kPronoun},
    FunctionWord{"him", R::kPronoun},
    FunctionWord{"her", R::kPronoun},
    FunctionWord{"someone", R::kPronoun},
    FunctionWord{"somebody", R::kPronoun},
    FunctionWord{"something", R::kPronoun},
    FunctionWord{"everyone", R::kPronoun},
    FunctionWord{"everybody", R::kPronoun},
    FunctionWord{"everything", R::kPronoun},
    FunctionWord{"that", R::kPronoun},  // relative

    FunctionWord{"what", R::kQueryWord},
    FunctionWord{"who", R::kQueryWord},
    FunctionWord{"whom", R::kQueryWord},
    FunctionWord{"whose", R::kQueryWord},
    FunctionWord{"which", R::kQueryWord},
    FunctionWord{"where", R::kQueryWord},
    FunctionWord{"when", R::kQueryWord},
    FunctionWord{"how", R::kQueryWord},
    FunctionWord{"how many", R::kQueryWord},
    FunctionWord{"how much", R::kQueryWord},

    FunctionWord{"can", R::kModal},
    FunctionWord{"cannot", R::kModal},
    FunctionWord{"must", R::kModal},
    FunctionWord{"may", R::kModal},
    FunctionWord{"should", R::kModal},
    FunctionWord{"might", R::kModal},

    FunctionWord{"does", R::kAuxiliary},
    FunctionWord{"do", R::kAuxiliary},

    FunctionWord{"is", R::kBe},
    FunctionWord{"are", R::kBe},
    FunctionWord{"be", R::kBe},

    FunctionWord{"'s", R::kGenitive},
    FunctionWord{"'", R::kGenitive},

    FunctionWord{"yes", R::kResponse},
};

constexpr std::array<std::string_view, 2> kFixedPhrases = {
    "there is",
    "it is true that",
};

std::size_t WordCount(std::string_view phrase) {
  return static_cast<std::size_t>(
             std::count(phrase.begin(), phrase.end(), ' ')) +
         1;
}

bool IsBlank(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool IsAsciiAlpha(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

}  // namespace

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view FunctionRoleName(FunctionRole role) {
  switch (role) {
    case R::kDeterminer: return "determiner";
    case R::kQuantifier: return "quantifier";
    case R::kCoordinator: return "coordinator";
    case R::kNegation: return "negation";
    case R::kPronoun: return "pronoun";
    case R::kQueryWord: return "query-word";
    case R::kModal: return "modal";
    case R::kAuxiliary: return "auxiliary";
    case R::kBe: return "be";
    case R::kGenitive: return "genitive";
    case R::kResponse: return "response";
  }
  return "?";
}

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kNoun: return "noun";
    case Category::kVerb: return "verb";
    case Category::kAdjective: return "adj";
    case Category::kAdverb: return "adv";
    case Category::kPreposition: return "prep";
  }
  return "?";
}

std::optional<Category> ParseCategory(std::string_view text) {
  if (text == "noun") return Category::kNoun;
  if (text == "verb") return Category::kVerb;
  if (text == "adj") return Category::kAdjective;
  if (text == "adv") return Category::kAdverb;
  if (text == "prep") return Category::kPreposition;
  return std::nullopt;
}

std::span<const FunctionWord> Lexicon::FunctionWords() { return kFunctionWords; }

std::span<const std::string_view> Lexicon::FixedPhrases() {
  return kFixedPhrases;
}

std::size_t Lexicon::MaxPhraseWords() {
  std::size_t n = 1;
  for (const FunctionWord& w : kFunctionWords) n = std::max(n, WordCount(w.phrase));
  for (std::string_view p : kFixedPhrases) n = std::max(n, WordCount(p));
  return n;
}

const FunctionWord* Lexicon::FindFunctionWord(std::string_view phrase) const {
  const std::string lower = ToLower(phrase);
  for (const FunctionWord& w : kFunctionWords) {
    if (w.phrase == lower) return &w;
  }
  return nullptr;
}

bool Lexicon::IsFixedPhrase(std::string_view phrase) {
  const std::string lower = ToLower(phrase);
  return std::find(kFixedPhrases.begin(), kFixedPhrases.end(), lower) !=
         kFixedPhrases.end();
}

bool Lexicon::IsReservedWord(std::string_view word) {
  const std::string lower = ToLower(word);
  for (const FunctionWord& w : kFunctionWords) {
    if (w.phrase == lower) return true;
  }
  for (std::string_view phrase : kFixedPhrases) {
    std::size_t start = 0;
    while (start <= phrase.size()) {
      std::size_t end = phrase.find(' ', start);
      if (end == std::string_view::npos) end = phrase.size();
      if (phrase.substr(start, end - start) == lower) return true;
      start = end + 1;
    }
  }
  return false;
}

const ContentWord* Lexicon::FindContentWord(std::string_view surface) const {
  auto it = content_words_.find(surface);
  return it == content_words_.end() ? nullptr : &it->second;
}

Lexicon Lexicon::Register(std::string_view surface, Category category) const {
  return Register(surface, category, Upper(surface));
}

Lexicon Lexicon::Register(std::string_view surface, Category category,
                          std::string_view lexeme,
                          GrammaticalNumber number) const {
  Lexicon copy = *this;
  copy.RegisterInPlace(surface, category, lexeme, number);
  return copy;
}

void Lexicon::RegisterInPlace(std::string_view surface, Category category,
                              std::string_view lexeme,
                              GrammaticalNumber number) {
  const std::string word(surface);
  if (word.empty()) {
    throw Error(ErrorCode::kLexiconFormat, "empty content word");
  }
  if (std::any_of(word.begin(), word.end(),
                  [](unsigned char c) { return IsBlank(c); })) {
    std::string hyphenated = word;
    std::replace_if(
        hyphenated.begin(), hyphenated.end(),
        [](unsigned char c) { return IsBlank(c); }, '-');
    throw Error(ErrorCode::kBlankSpaceInContentWord,
                "content word '" + word +
                    "' contains a blank space; write it as '" + hyphenated +
                    "'");
  }
  if (word.find_first_of(".,?") != std::string::npos) {
    throw Error(ErrorCode::kLexiconFormat,
                "content word '" + word + "' contains punctuation");
  }
  if (std::all_of(word.begin(), word.end(),
                  [](unsigned char c) { return IsDigit(c) || c == '-'; })) {
    throw Error(ErrorCode::kLexiconFormat,
                "content word '" + word + "' would read as a number");
  }
  if (IsReservedWord(word)) {
    throw Error(ErrorCode::kFunctionWordCollision,
                "'" + word + "' is a predefined function word");
  }
  if (proper_names_.contains(word)) {
    throw Error(ErrorCode::kCategoryConflict,
                "'" + word + "' is already registered as a proper name");
  }
  auto it = content_words_.find(word);
  if (it != content_words_.end()) {
    if (it->second.category != category) {
      throw Error(ErrorCode::kCategoryConflict,
                  "'" + word + "' is already registered as " +
                      std::string(CategoryName(it->second.category)));
    }
    return;
  }
  content_words_.emplace(
      word, ContentWord{word, category, std::string(lexeme), number});
}

std::optional<Error> Lexicon::CheckProperName(std::string_view name) const {
  const std::string word(name);
  auto ok_start = [](unsigned char c) {
    return IsAsciiAlpha(c) || c == '_' || c >= 0x80;
  };
  auto ok_rest = [](unsigned char c) {
    return IsAsciiAlpha(c) || IsDigit(c) || c == '_' || c == '-' || c >= 0x80;
  };
  if (word.empty() || !ok_start(static_cast<unsigned char>(word.front())) ||
      !std::all_of(word.begin() + 1, word.end(), [&](char c) {
        return ok_rest(static_cast<unsigned char>(c));
      })) {
    return Error(ErrorCode::kInvalidName,
                 "'" + word +
                     "' is not a single word (letters, digits, '_' and '-' "
                     "only, starting with a letter or '_')");
  }
  if (IsReservedWord(word)) {
    return Error(ErrorCode::kIdentifierCollision,
                 "'" + word + "' would read as the function word '" +
                     ToLower(word) + "'");
  }
  if (const ContentWord* w = FindContentWord(word)) {
    return Error(ErrorCode::kIdentifierCollision,
                 "'" + word + "' would read as the " +
                     std::string(CategoryName(w->category)) + " '" +
                     w->surface + "'");
  }
  return std::nullopt;
}

Lexicon Lexicon::WithProperName(std::string_view name) const {
  if (proper_names_.contains(name)) return *this;
  if (std::optional<Error> problem = CheckProperName(name)) throw *problem;
  Lexicon copy = *this;
  copy.proper_names_.emplace(name);
  return copy;
}

Lexicon Lexicon::Default() {
  using C = Category;
  using N = GrammaticalNumber;
  struct Entry {
    std::string_view surface;
    Category category;
    std::string_view lexeme;
    GrammaticalNumber number;
  };
  static constexpr Entry kEntries[] = {
      {"datatype", C::kNoun, lexeme::kDatatype, N::kSingular},
      {"data-type", C::kNoun, lexeme::kDatatype, N::kSingular},
      {"constant", C::kNoun, lexeme::kConstant, N::kSingular},
      {"element", C::kNoun, lexeme::kElement, N::kSingular},
      {"elements", C::kNoun, lexeme::kElement, N::kPlural},
      {"component", C::kNoun, lexeme::kComponent, N::kSingular},
      {"components", C::kNoun, lexeme::kComponent, N::kPlural},
      {"port", C::kNoun, lexeme::kPort, N::kSingular},
      {"ports", C::kNoun, lexeme::kPort, N::kPlural},
      {"channel", C::kNoun, lexeme::kChannel, N::kSingular},
      {"state", C::kNoun, lexeme::kState, N::kSingular},
      {"states", C::kNoun, lexeme::kState, N::kPlural},
      {"state-automaton", C::kNoun, lexeme::kStateAutomaton, N::kSingular},
      {"transition", C::kNoun, lexeme::kTransition, N::kSingular},
      {"type", C::kNoun, lexeme::kType, N::kSingular},
      {"integer", C::kNoun, lexeme::kInteger, N::kSingular},
      {"boolean", C::kNoun, lexeme::kBoolean, N::kSingular},
      {"consists-of", C::kVerb, lexeme::kConsistsOf, N::kSingular},
      {"connects", C::kVerb, lexeme::kConnects, N::kSingular},
      {"performs", C::kVerb, lexeme::kPerforms, N::kSingular},
      {"has", C::kVerb, lexeme::kHave, N::kSingular},
      {"have", C::kVerb, lexeme::kHave, N::kPlural},
      {"equal", C::kAdjective, lexeme::kEqual, N::kSingular},
      {"triggered-by", C::kAdjective, lexeme::kTriggeredBy, N::kSingular},
      {"input", C::kAdjective, lexeme::kInput, N::kSingular},
      {"output", C::kAdjective, lexeme::kOutput, N::kSingular},
      {"initial", C::kAdjective, lexeme::kInitial, N::kSingular},
      {"of", C::kPreposition, lexeme::kOf, N::kSingular},
      {"to", C::kPreposition, lexeme::kTo, N::kSingular},
      {"from", C::kPreposition, lexeme::kFrom, N::kSingular},
  };
  Lexicon lexicon;
  for (const Entry& e : kEntries) {
    lexicon.RegisterInPlace(e.surface, e.category, e.lexeme, e.number);
  }
  return lexicon;
}

Lexicon LoadLexicon(std::string_view text, const Lexicon& base) {
  Lexicon lexicon = base;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string category_text, surface, lexeme_text, extra;
    if (!(fields >> category_text)) continue;
    const SourceLocation where{line_no, 1};
    if (!(fields >> surface)) {
      throw Error(ErrorCode::kLexiconFormat,
                  "expected '<category> <surface> [<lexeme>]'", where);
    }
    fields >> lexeme_text;
    if (fields >> extra) {
      throw Error(ErrorCode::kLexiconFormat,
                  "too many fields (multiword entries must be hyphenated)",
                  where);
    }
    std::optional<Category> category = ParseCategory(category_text);
    if (!category) {
      throw Error(ErrorCode::kLexiconFormat,
                  "unknown category '" + category_text +
                      "' (expected noun, verb, adj, adv or prep)",
                  where);
    }
    try {
      lexicon = lexeme_text.empty()
                    ? lexicon.Register(surface, *category)
                    : lexicon.Register(surface, *category, lexeme_text);
    } catch (const Error& e) {
      throw Error(e.code(), e.message(), where);
    }
  }
  return lexicon;
}

Lexicon LoadLexiconFile(const std::string& path, const Lexicon& base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, path + ": no such file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return LoadLexicon(buffer.str(), base);
}

}  // namespace acenls
