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

// Reads a whole .ace document back into sentences and facts.
//
// Lines starting with '#' are comments. Two comment forms are directives
// that extend the session vocabulary before any sentence is read:
//
//   # names: tGreen counter      registers proper names
//   # words: go reset            registers nouns (guard and action words)
//
// Every other non-blank line holds one or more sentences.

#ifndef ACENLS_ACE_READER_H_
#define ACENLS_ACE_READER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acenls/error.h"
#include "acenls/factbase.h"
#include "acenls/grammar.h"
#include "acenls/lexicon.h"

namespace acenls {

struct SentenceResult {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based, start of the sentence
  std::string text;
  std::optional<Sentence> sentence;  // set on success
  std::optional<Error> error;        // set on failure; location is absolute
};

struct AceDocument {
  std::vector<SentenceResult> sentences;
  std::vector<Error> directive_errors;
  Lexicon lexicon;  // base plus directives
  FactBase facts;   // from the sentences that parsed

  bool ok() const;
  std::size_t failures() const;
};

AceDocument ReadAceDocument(std::string_view text, const Lexicon& base);

// "line:column: Code: message", omitting an unknown position.
std::string FormatError(const Error& error);

}  // namespace acenls

#endif  // ACENLS_ACE_READER_H_
