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

#ifndef ACENLS_QUERY_H_
#define ACENLS_QUERY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "acenls/factbase.h"
#include "acenls/grammar.h"
#include "acenls/lexicon.h"

namespace acenls {

struct Answer {
  std::string text;                  // one sentence, checked by the grammar
  std::optional<bool> truth;         // yes/no questions
  std::optional<std::int64_t> count;  // how-many questions

  friend bool operator==(const Answer&, const Answer&) = default;
};

// Parses one question. The returned form is never question::Unsupported:
// grammatical questions without an answerable form throw
// kUnsupportedQuestionForm. Also throws kUnknownToken and kInvalidSentence.
Question ParseQuestion(std::string_view text, const Lexicon& lexicon);

// Answers from `facts` alone. Throws kUnknownEntity when the question is
// about a name the facts do not mention. The answer text is checked
// against `lexicon`, which must know every name the facts use.
Answer AnswerQuestion(const Question& question, const FactBase& facts,
                      const Lexicon& lexicon);

}  // namespace acenls

#endif  // ACENLS_QUERY_H_
