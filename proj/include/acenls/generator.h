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

// Template-based rendering of a model as controlled English.
//
// Every emitted sentence is tokenized and checked against the session
// lexicon before it is included; a sentence that fails its own check is a
// template bug and aborts generation with kValidationInternalError.

#ifndef ACENLS_GENERATOR_H_
#define ACENLS_GENERATOR_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "acenls/grammar.h"
#include "acenls/lexicon.h"
#include "acenls/model.h"

namespace acenls {

enum class SectionKind { kDatatypes, kArchitecture, kAutomata };

std::string_view SectionKindName(SectionKind kind);  // "datatypes", ...
std::string_view SectionHeading(SectionKind kind);   // "Data dictionary", ...

inline const std::set<SectionKind>& AllSections() {
  static const std::set<SectionKind> all = {
      SectionKind::kDatatypes, SectionKind::kArchitecture,
      SectionKind::kAutomata};
  return all;
}

struct Section {
  SectionKind kind;
  std::string heading;
  std::vector<Sentence> sentences;
};

struct Document {
  std::vector<Section> sections;  // only non-empty ones, in kind order
  Lexicon lexicon;                // session lexicon the sentences check against
  std::vector<std::string> directive_names;  // proper names not capitalized
  std::vector<std::string> directive_words;  // nouns registered for guards

  std::vector<const Sentence*> flat_sentences() const;
  bool empty() const { return sections.empty(); }
};

// Sentence texts for one model element, in emission order.
std::vector<std::string> GenerateDatatype(const EnumerationType& e);
std::vector<std::string> GenerateConstant(const ConstantFunction& c);
std::vector<std::string> GenerateArchitecture(const Component& root);
// Throws kGuardNotLexicalizable.
std::vector<std::string> GenerateAutomaton(const StateAutomaton& a);

// "A", "A and B", "A, B, and C".
std::string JoinList(const std::vector<std::string>& items);

// Guard and action text as one blank-free token: whitespace runs become
// '-'. Admits letters, digits, '-', '_' and '=' with at least one letter
// or digit; anything else throws kGuardNotLexicalizable.
std::string LexicalizeOpaque(std::string_view text);

// `base` plus every model identifier as a proper name and every guard or
// action word as a noun. Throws kIdentifierCollision, kInvalidName or
// kGuardNotLexicalizable.
Lexicon SessionLexicon(const Model& model, const Lexicon& base);

// Like SessionLexicon, but skips identifiers that cannot be registered.
// Used when only questions about an existing model need tokenizing.
Lexicon LenientSessionLexicon(const Model& model, const Lexicon& base);

Document GenerateDocument(const Model& model, const Lexicon& base,
                          const std::set<SectionKind>& sections = AllSections());

// The .ace payload: directive comments, then each section as a '#' heading
// followed by one sentence per line. LF line endings.
std::string ToAceText(const Document& doc);

}  // namespace acenls

#endif  // ACENLS_GENERATOR_H_
