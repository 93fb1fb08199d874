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

#include "acenls/query.h"

#include "acenls/tokenizer.h"

namespace acenls {

namespace {

[[noreturn]] void Unknown(const std::string& name) {
  throw Error(ErrorCode::kUnknownEntity, "nothing is known about '" + name + "'");
}

template <typename T, typename Pred>
const T* FindFact(const FactBase& facts, Pred pred) {
  for (const T* f : facts.All<T>()) {
    if (pred(*f)) return f;
  }
  return nullptr;
}

std::string WhatIsText(const std::string& n, const FactBase& facts) {
  auto kind = [](Kind k) { return "It is a " + std::string(KindNoun(k)) + "."; };
  if (FindFact<fact::IsDatatype>(facts, [&](auto& f) { return f.type == n; })) {
    return kind(Kind::kDatatype);
  }
  if (FindFact<fact::IsConstant>(facts, [&](auto& f) { return f.name == n; })) {
    return kind(Kind::kConstant);
  }
  if (FindFact<fact::IsComponent>(facts, [&](auto& f) { return f.name == n; })) {
    return kind(Kind::kComponent);
  }
  if (FindFact<fact::IsAutomaton>(facts, [&](auto& f) { return f.automaton == n; })) {
    return kind(Kind::kStateAutomaton);
  }
  if (FindFact<fact::Connects>(facts, [&](auto& f) { return f.channel == n; })) {
    return kind(Kind::kChannel);
  }
  if (auto* f = FindFact<fact::ElementOf>(facts, [&](auto& f) { return f.member == n; })) {
    return "It is an element of " + f->type + ".";
  }
  if (auto* f = FindFact<fact::HasState>(facts, [&](auto& f) { return f.state == n; })) {
    return "It is a state of " + f->automaton + ".";
  }
  if (auto* f = FindFact<fact::HasPort>(facts, [&](auto& f) { return f.port == n; })) {
    return "It is a port of " + f->component + ".";
  }
  Unknown(n);
}

bool IsKind(const std::string& n, Kind k, const FactBase& facts) {
  switch (k) {
    case Kind::kDatatype: return facts.Contains(fact::IsDatatype{n});
    case Kind::kConstant: return facts.Contains(fact::IsConstant{n});
    case Kind::kComponent: return facts.Contains(fact::IsComponent{n});
    case Kind::kChannel:
      return FindFact<fact::Connects>(facts, [&](auto& f) { return f.channel == n; });
    case Kind::kStateAutomaton:
      return FindFact<fact::IsAutomaton>(facts,
                                         [&](auto& f) { return f.automaton == n; });
  }
  return false;
}

std::string YesNo(bool yes) { return yes ? "Yes, it is." : "No, it is not."; }

}  // namespace

Question ParseQuestion(std::string_view text, const Lexicon& lexicon) {
  std::vector<Token> tokens = Tokenize(text, lexicon);
  if (tokens.empty() || tokens.back().surface != "?") {
    throw Error(ErrorCode::kInvalidSentence, "a question must end with '?'");
  }
  Sentence s = ParseSentence(tokens, nullptr);
  auto* q = std::get_if<Question>(&s.reading);
  if (q == nullptr) {
    throw Error(ErrorCode::kInvalidSentence, "not a question");
  }
  if (auto* u = std::get_if<question::Unsupported>(&q->form)) {
    throw Error(ErrorCode::kUnsupportedQuestionForm, u->reason);
  }
  return *q;
}

Answer AnswerQuestion(const Question& question, const FactBase& facts,
                      const Lexicon& lexicon) {
  Answer a = std::visit(
      [&](const auto& q) -> Answer {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, question::WhatIs>) {
          return Answer{WhatIsText(q.name, facts), std::nullopt, std::nullopt};
        } else if constexpr (std::is_same_v<T, question::HowManyElements>) {
          auto* f = FindFact<fact::HasElementCount>(
              facts, [&](auto& f) { return f.type == q.type; });
          if (f == nullptr) {
            if (!facts.Knows(q.type)) Unknown(q.type);
            throw Error(ErrorCode::kUnknownEntity,
                        "'" + q.type + "' is not a data-type with elements");
          }
          return Answer{"It has " + std::to_string(f->count) +
                            (f->count == 1 ? " element." : " elements."),
                        std::nullopt, f->count};
        } else if constexpr (std::is_same_v<T, question::IsElementOf>) {
          if (!facts.Contains(fact::IsDatatype{q.type})) {
            if (!facts.Knows(q.type)) Unknown(q.type);
            throw Error(ErrorCode::kUnknownEntity,
                        "'" + q.type + "' is not a data-type");
          }
          const bool yes = facts.Contains(fact::ElementOf{q.member, q.type});
          return Answer{YesNo(yes), yes, std::nullopt};
        } else if constexpr (std::is_same_v<T, question::IsA>) {
          if (!facts.Knows(q.name)) Unknown(q.name);
          const bool yes = IsKind(q.name, q.kind, facts);
          return Answer{YesNo(yes), yes, std::nullopt};
        } else {
          throw Error(ErrorCode::kUnsupportedQuestionForm, q.reason);
        }
      },
      question.form);

  std::vector<Token> tokens;
  try {
    tokens = Tokenize(a.text, lexicon);
  } catch (const Error& e) {
    throw Error(ErrorCode::kValidationInternalError,
                "answer \"" + a.text + "\" does not tokenize: " + e.message());
  }
  ValidationReport report = CheckSentence(tokens);
  if (!report.ok) {
    throw Error(ErrorCode::kValidationInternalError,
                "answer \"" + a.text + "\" fails the grammar: " +
                    report.diagnostics.front().message);
  }
  return a;
}

}  // namespace acenls
