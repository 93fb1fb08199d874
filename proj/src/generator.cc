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

#include "acenls/generator.h"

#include <algorithm>
#include <charconv>
#include <cstdint>

#include "acenls/tokenizer.h"

namespace acenls {

std::string_view SectionKindName(SectionKind kind) {
  switch (kind) {
    case SectionKind::kDatatypes: return "datatypes";
    case SectionKind::kArchitecture: return "architecture";
    case SectionKind::kAutomata: return "automata";
  }
  return "?";
}

std::string_view SectionHeading(SectionKind kind) {
  switch (kind) {
    case SectionKind::kDatatypes: return "Data dictionary";
    case SectionKind::kArchitecture: return "Architecture";
    case SectionKind::kAutomata: return "Automata";
  }
  return "?";
}

std::vector<const Sentence*> Document::flat_sentences() const {
  std::vector<const Sentence*> out;
  for (const Section& s : sections) {
    for (const Sentence& sentence : s.sentences) out.push_back(&sentence);
  }
  return out;
}

std::string JoinList(const std::vector<std::string>& items) {
  if (items.size() == 1) return items[0];
  if (items.size() == 2) return items[0] + " and " + items[1];
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    if (i + 1 == items.size()) out += "and ";
    out += items[i];
  }
  return out;
}

namespace {

// "one element that is X" / "3 elements that are X, Y, and Z".
std::string Counted(std::string_view singular, std::string_view plural,
                    const std::vector<std::string>& items) {
  if (items.size() == 1) {
    return "one " + std::string(singular) + " that is " + items[0];
  }
  return std::to_string(items.size()) + " " + std::string(plural) +
         " that are " + JoinList(items);
}

std::string Article(std::string_view word) {
  const char c = word.empty() ? 'x' : word[0];
  const bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  return vowel ? "an" : "a";
}

bool IsAlnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

bool IsNumeric(std::string_view w) {
  if (w.starts_with('-')) w.remove_prefix(1);
  return !w.empty() &&
         std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool IsCapitalizedIdentifier(std::string_view w) {
  if (w.empty() || !(w[0] >= 'A' && w[0] <= 'Z')) return false;
  return std::all_of(w.begin(), w.end(),
                     [](char c) { return IsAlnum(c) || c == '_' || c == '-'; });
}

void CollectComponents(const Component& c, std::vector<const Component*>* out) {
  out->push_back(&c);
  for (const Component& child : c.subcomponents) CollectComponents(child, out);
}

// Identifiers in first-use order, each once.
std::vector<std::string> ModelIdentifiers(const Model& model) {
  std::vector<std::string> out;
  auto add = [&](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  if (model.data_dictionary) {
    for (const EnumerationType& e : model.data_dictionary->enumerations) {
      add(e.name);
      for (const std::string& m : e.members) add(m);
    }
    for (const ConstantFunction& c : model.data_dictionary->constants) add(c.name);
  }
  for (const Component* c : ComponentsDepthFirst(model)) {
    add(c->name);
    for (const Port& p : c->ports) {
      add(p.name);
      if (!IsBuiltinType(p.type_name)) add(p.type_name);
    }
    for (const Channel& ch : c->channels) add(ch.name);
  }
  for (const StateAutomaton& a : model.automata) {
    add(a.name);
    for (const std::string& s : a.states) add(s);
  }
  return out;
}

std::vector<std::string> OpaqueWords(const Model& model) {
  std::vector<std::string> out;
  for (const StateAutomaton& a : model.automata) {
    for (const Transition& t : a.transitions) {
      for (const auto* text : {&t.guard, &t.action}) {
        if (!*text) continue;
        std::string w = LexicalizeOpaque(**text);
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
      }
    }
  }
  return out;
}

// Registers one guard or action word so that it tokenizes as a single
// content word, name or number. Returns true if a noun was added.
bool RegisterOpaque(const std::string& w, Lexicon* lexicon) {
  auto reject = [&](const std::string& why) {
    throw Error(ErrorCode::kGuardNotLexicalizable,
                "guard or action '" + w + "' " + why);
  };
  if (IsNumeric(w)) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
      reject("is a number out of range");
    }
    return false;
  }
  const std::string lower = ToLower(w);
  if (Lexicon::IsReservedWord(lower) || lexicon->FindFunctionWord(lower)) {
    reject("is a function word");
  }
  if (lexicon->FindContentWord(w) || lexicon->IsProperName(w) ||
      IsCapitalizedIdentifier(w)) {
    return false;
  }
  try {
    *lexicon = lexicon->Register(w, Category::kNoun);
  } catch (const Error& e) {
    reject("cannot be registered: " + e.message());
  }
  return true;
}

struct Session {
  Lexicon lexicon;
  std::vector<std::string> names;
  std::vector<std::string> words;
};

Session BuildSession(const Model& model, const Lexicon& base, bool lenient) {
  Session s{base, {}, {}};
  for (const std::string& name : ModelIdentifiers(model)) {
    if (lenient && s.lexicon.CheckProperName(name)) continue;
    s.lexicon = s.lexicon.WithProperName(name);
    if (!(name[0] >= 'A' && name[0] <= 'Z')) s.names.push_back(name);
  }
  std::vector<std::string> words;
  try {
    words = OpaqueWords(model);
  } catch (const Error&) {
    if (!lenient) throw;
  }
  for (const std::string& w : words) {
    try {
      if (RegisterOpaque(w, &s.lexicon)) s.words.push_back(w);
    } catch (const Error&) {
      if (!lenient) throw;
    }
  }
  return s;
}

}  // namespace

std::string LexicalizeOpaque(std::string_view text) {
  std::string out;
  bool pending_gap = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending_gap = !out.empty();
      continue;
    }
    if (pending_gap) out += '-';
    pending_gap = false;
    out += c;
  }
  const bool allowed = std::all_of(out.begin(), out.end(), [](char c) {
    return IsAlnum(c) || c == '-' || c == '_' || c == '=';
  });
  if (!allowed || std::none_of(out.begin(), out.end(), IsAlnum)) {
    throw Error(ErrorCode::kGuardNotLexicalizable,
                "'" + std::string(text) +
                    "' cannot be written as one word; only letters, digits, "
                    "'-', '_' and '=' are allowed");
  }
  return out;
}

std::vector<std::string> GenerateDatatype(const EnumerationType& e) {
  return {e.name + " is a datatype.",
          "It consists-of " + Counted("element", "elements", e.members) + "."};
}

std::vector<std::string> GenerateConstant(const ConstantFunction& c) {
  return {c.name + " is a constant.",
          "It is equal to " + std::to_string(c.value) + "."};
}

std::vector<std::string> GenerateArchitecture(const Component& root) {
  std::vector<const Component*> components;
  CollectComponents(root, &components);
  std::vector<std::string> out;
  for (const Component* c : components) {
    out.push_back(c->name + " is a component.");
    if (!c->subcomponents.empty()) {
      std::vector<std::string> names;
      for (const Component& child : c->subcomponents) names.push_back(child.name);
      out.push_back("It consists-of " + Counted("component", "components", names) +
                    ".");
    }
  }
  for (const Component* c : components) {
    for (const Port& p : c->ports) {
      const std::string_view dir = PortDirectionName(p.direction);
      out.push_back(c->name + " has " + Article(dir) + " " + std::string(dir) +
                    " port " + p.name + " of type " + p.type_name + ".");
    }
  }
  for (const Component* c : components) {
    for (const Channel& ch : c->channels) {
      out.push_back(ch.name + " is a channel.");
      out.push_back("It connects the port " + ch.source.port + " of " +
                    ch.source.component + " to the port " + ch.target.port +
                    " of " + ch.target.component + ".");
    }
  }
  return out;
}

std::vector<std::string> GenerateAutomaton(const StateAutomaton& a) {
  std::vector<std::string> out = {
      a.name + " is a state-automaton of the component " + a.owner + ".",
      "It consists-of " + Counted("state", "states", a.states) + ".",
      "The initial state is " + a.initial_state + "."};
  for (const Transition& t : a.transitions) {
    out.push_back("There is a transition from " + t.source + " to " + t.target +
                  ".");
    if (t.guard) out.push_back("It is triggered-by " + LexicalizeOpaque(*t.guard) + ".");
    if (t.action) out.push_back("It performs " + LexicalizeOpaque(*t.action) + ".");
  }
  return out;
}

Lexicon SessionLexicon(const Model& model, const Lexicon& base) {
  return BuildSession(model, base, /*lenient=*/false).lexicon;
}

Lexicon LenientSessionLexicon(const Model& model, const Lexicon& base) {
  return BuildSession(model, base, /*lenient=*/true).lexicon;
}

Document GenerateDocument(const Model& model, const Lexicon& base,
                          const std::set<SectionKind>& sections) {
  Session session = BuildSession(model, base, /*lenient=*/false);
  Document doc;
  doc.lexicon = session.lexicon;
  doc.directive_names = std::move(session.names);
  doc.directive_words = std::move(session.words);

  Discourse discourse;
  auto emit = [&](SectionKind kind, const std::vector<std::string>& texts) {
    if (!sections.contains(kind) || texts.empty()) return;
    Section section{kind, std::string(SectionHeading(kind)), {}};
    for (const std::string& text : texts) {
      try {
        std::vector<Token> tokens = Tokenize(text, doc.lexicon);
        ValidationReport report = CheckSentence(tokens);
        if (!report.ok) {
          const Diagnostic& d = report.diagnostics.front();
          throw Error(ErrorCode::kInvalidSentence, d.rule + ": " + d.message);
        }
        Sentence sentence = ParseSentence(tokens, &discourse);
        sentence.text = text;
        section.sentences.push_back(std::move(sentence));
      } catch (const Error& e) {
        throw Error(ErrorCode::kValidationInternalError,
                    "generated sentence \"" + text + "\" failed validation: " +
                        std::string(ErrorCodeName(e.code())) + ": " + e.message());
      }
    }
    doc.sections.push_back(std::move(section));
  };

  std::vector<std::string> dictionary;
  if (model.data_dictionary) {
    for (const EnumerationType& e : model.data_dictionary->enumerations) {
      for (std::string& s : GenerateDatatype(e)) dictionary.push_back(std::move(s));
    }
    for (const ConstantFunction& c : model.data_dictionary->constants) {
      for (std::string& s : GenerateConstant(c)) dictionary.push_back(std::move(s));
    }
  }
  emit(SectionKind::kDatatypes, dictionary);
  if (model.architecture) {
    emit(SectionKind::kArchitecture, GenerateArchitecture(*model.architecture));
  }
  std::vector<std::string> automata;
  for (const StateAutomaton& a : model.automata) {
    for (std::string& s : GenerateAutomaton(a)) automata.push_back(std::move(s));
  }
  emit(SectionKind::kAutomata, automata);
  return doc;
}

std::string ToAceText(const Document& doc) {
  std::string out;
  auto directive = [&](std::string_view key, const std::vector<std::string>& v) {
    if (v.empty()) return;
    out += "# " + std::string(key) + ":";
    for (const std::string& w : v) out += " " + w;
    out += "\n";
  };
  if (!doc.empty()) {
    directive("names", doc.directive_names);
    directive("words", doc.directive_words);
  }
  for (const Section& section : doc.sections) {
    out += "# " + section.heading + "\n";
    for (const Sentence& s : section.sentences) out += s.text + "\n";
  }
  return out;
}

}  // namespace acenls
