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

#include "acenls/ace-reader.h"

#include <map>
#include <sstream>

#include "acenls/tokenizer.h"

namespace acenls {

namespace {

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> Words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Error Relocate(const Error& e, std::size_t line, std::size_t column_base) {
  SourceLocation loc{line, column_base};
  if (e.location() && e.location()->column > 0) {
    loc.column = column_base + e.location()->column - 1;
  }
  return Error(e.code(), e.message(), loc);
}

Lexicon ApplyDirectives(const std::vector<std::string_view>& lines,
                        Lexicon lexicon, std::vector<Error>* errors) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = Trim(lines[i]);
    if (!line.starts_with('#')) continue;
    line = Trim(line.substr(1));
    const bool names = line.starts_with("names:");
    const bool words = line.starts_with("words:");
    if (!names && !words) continue;
    for (const std::string& w : Words(line.substr(6))) {
      try {
        lexicon = names ? lexicon.WithProperName(w)
                        : lexicon.Register(w, Category::kNoun);
      } catch (const Error& e) {
        errors->push_back(Error(e.code(), e.message(), SourceLocation{i + 1, 1}));
      }
    }
  }
  return lexicon;
}

// Transitions are collected whole before they become facts, since guard and
// action arrive in later sentences.
struct PendingTransition {
  fact::HasTransition fact;
};

}  // namespace

bool AceDocument::ok() const { return failures() == 0; }

std::size_t AceDocument::failures() const {
  std::size_t n = directive_errors.size();
  for (const SentenceResult& s : sentences) n += s.error ? 1 : 0;
  return n;
}

AceDocument ReadAceDocument(std::string_view text, const Lexicon& base) {
  AceDocument doc;
  const std::vector<std::string_view> lines = SplitLines(text);
  doc.lexicon = ApplyDirectives(lines, base, &doc.directive_errors);

  Discourse discourse;
  std::map<std::size_t, PendingTransition> transitions;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.starts_with('#')) continue;
    for (TokenizedSentence& ts : TokenizeSentences(line, doc.lexicon)) {
      SentenceResult result;
      result.line = i + 1;
      result.column = ts.offset + 1;
      result.text = ts.text;
      try {
        if (ts.error) throw *ts.error;
        Sentence s = ParseSentence(ts.tokens, &discourse);
        if (auto* t = std::get_if<reading::TransitionDecl>(&s.reading)) {
          transitions[t->transition.ordinal].fact = fact::HasTransition{
              t->transition.automaton, t->source.name, t->target.name,
              std::nullopt, std::nullopt};
        } else if (auto* g = std::get_if<reading::TriggeredBy>(&s.reading)) {
          auto& slot = transitions[g->transition->ordinal].fact.guard;
          if (slot) {
            throw Error(ErrorCode::kInvalidSentence,
                        "the transition already has a guard",
                        SourceLocation{0, ts.offset + 1});
          }
          slot = g->guard;
        } else if (auto* p = std::get_if<reading::Performs>(&s.reading)) {
          auto& slot = transitions[p->transition->ordinal].fact.action;
          if (slot) {
            throw Error(ErrorCode::kInvalidSentence,
                        "the transition already has an action",
                        SourceLocation{0, ts.offset + 1});
          }
          slot = p->action;
        }
        result.sentence = std::move(s);
      } catch (const Error& e) {
        result.error = Relocate(e, i + 1, 1);
      }
      doc.sentences.push_back(std::move(result));
    }
  }

  // Facts in document order; a transition lands where it was introduced.
  for (const SentenceResult& r : doc.sentences) {
    if (!r.sentence) continue;
    const Reading& rd = r.sentence->reading;
    if (auto* t = std::get_if<reading::TransitionDecl>(&rd)) {
      doc.facts.Add(transitions.at(t->transition.ordinal).fact);
      continue;
    }
    for (Fact& f : FactsOf(rd)) doc.facts.Add(std::move(f));
  }
  return doc;
}

std::string FormatError(const Error& error) {
  std::string out;
  if (const auto& loc = error.location()) {
    if (loc->line > 0) out += std::to_string(loc->line) + ":";
    if (loc->column > 0) out += std::to_string(loc->column) + ":";
    if (!out.empty()) out += " ";
  }
  out += std::string(ErrorCodeName(error.code())) + ": " + error.message();
  return out;
}

}  // namespace acenls
