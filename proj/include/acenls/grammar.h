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

// The sentence grammar of the controlled English subset and the readings its
// sentences map to.
//
// Declaratives (subject is a proper name or "It" unless shown):
//
//   X is a datatype.                  X is a constant.
//   X is a component.                 X is a channel.
//   X is a state-automaton [of the component C].
//   X is an element of T.             X is a state of A.
//   X is a port of C.                 X is equal to <number>.
//   X consists-of <count> <noun> that is|are <list>.
//   X has <count> element(s).
//   X has an input|output port P of type T.
//   X connects the port P of A to the port Q of B.
//   The initial state is S.
//   There is a transition from S to T.
//   X is triggered-by <guard>.        X performs <action>.
//   Yes, it is.                       No, it is not.
//   It is true that <declarative>.
//
// Questions:
//
//   What is X?    How many elements does X have?
//   Is X an element of T?    Is X a <kind>?
//
// Other wh-questions ("Where is X?") and "how much" questions are
// grammatical but have no answerable form.

#ifndef ACENLS_GRAMMAR_H_
#define ACENLS_GRAMMAR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "acenls/factbase.h"
#include "acenls/model.h"
#include "acenls/tokenizer.h"

namespace acenls {

// A noun-phrase slot: a proper name, or a pronoun that parsing resolves.
struct Ref {
  enum class Kind { kName, kSubjectPronoun, kObjectPronoun, kBuiltinType };

  std::string name;
  Kind kind = Kind::kName;
  std::size_t token = 0;

  static Ref Named(std::string n) { return Ref{std::move(n)}; }

  // Readings compare by what they denote, not by how it was written.
  friend bool operator==(const Ref& a, const Ref& b) { return a.name == b.name; }
};

// Identity of a transition introduced by "There is a transition ...".
struct TransitionRef {
  std::string automaton;
  std::string source;
  std::string target;
  std::size_t ordinal = 0;  // position among the document's transitions

  friend bool operator==(const TransitionRef&, const TransitionRef&) = default;
};

enum class Kind { kDatatype, kConstant, kComponent, kChannel, kStateAutomaton };
enum class Role { kElement, kState, kPort };
enum class Part { kElement, kState, kComponent };

namespace reading {

struct KindDecl {  // X is a datatype.
  Ref subject;
  Kind kind;
  friend bool operator==(const KindDecl&, const KindDecl&) = default;
};
struct AutomatonDecl {  // A is a state-automaton of the component C.
  Ref automaton;
  Ref owner;
  friend bool operator==(const AutomatonDecl&, const AutomatonDecl&) = default;
};
struct RoleOf {  // X is an element of T.
  Ref subject;
  Role role;
  Ref owner;
  friend bool operator==(const RoleOf&, const RoleOf&) = default;
};
struct EqualsValue {
  Ref subject;
  std::int64_t value = 0;
  friend bool operator==(const EqualsValue&, const EqualsValue&) = default;
};
struct ConsistsOf {
  Ref subject;
  std::int64_t count = 0;
  Part part;
  std::vector<Ref> members;
  friend bool operator==(const ConsistsOf&, const ConsistsOf&) = default;
};
struct ElementCount {  // X has 2 elements.
  Ref subject;
  std::int64_t count = 0;
  friend bool operator==(const ElementCount&, const ElementCount&) = default;
};
struct PortDecl {
  Ref component;
  PortDirection direction;
  Ref port;
  Ref type;
  friend bool operator==(const PortDecl&, const PortDecl&) = default;
};
struct ConnectsDecl {
  Ref channel;
  Ref source_component;
  Ref source_port;
  Ref target_component;
  Ref target_port;
  friend bool operator==(const ConnectsDecl&, const ConnectsDecl&) = default;
};
struct InitialDecl {
  std::string automaton;  // from context
  Ref state;
  friend bool operator==(const InitialDecl&, const InitialDecl&) = default;
};
struct TransitionDecl {
  TransitionRef transition;  // automaton and ordinal from context
  Ref source;
  Ref target;
  friend bool operator==(const TransitionDecl&, const TransitionDecl&) = default;
};
struct TriggeredBy {
  Ref subject;
  std::optional<TransitionRef> transition;
  std::string guard;
  friend bool operator==(const TriggeredBy&, const TriggeredBy&) = default;
};
struct Performs {
  Ref subject;
  std::optional<TransitionRef> transition;
  std::string action;
  friend bool operator==(const Performs&, const Performs&) = default;
};
struct ShortAnswer {
  bool yes = true;
  friend bool operator==(const ShortAnswer&, const ShortAnswer&) = default;
};

}  // namespace reading

namespace question {

struct WhatIs {
  std::string name;
  friend bool operator==(const WhatIs&, const WhatIs&) = default;
};
struct HowManyElements {
  std::string type;
  friend bool operator==(const HowManyElements&, const HowManyElements&) = default;
};
struct IsElementOf {
  std::string member;
  std::string type;
  friend bool operator==(const IsElementOf&, const IsElementOf&) = default;
};
struct IsA {
  std::string name;
  Kind kind;
  friend bool operator==(const IsA&, const IsA&) = default;
};
// Grammatical, but not one of the answerable forms.
struct Unsupported {
  std::string reason;
  friend bool operator==(const Unsupported&, const Unsupported&) = default;
};

}  // namespace question

using QuestionForm =
    std::variant<question::WhatIs, question::HowManyElements,
                 question::IsElementOf, question::IsA, question::Unsupported>;

struct Question {
  QuestionForm form;
  friend bool operator==(const Question&, const Question&) = default;
};

using Reading =
    std::variant<reading::KindDecl, reading::AutomatonDecl, reading::RoleOf,
                 reading::EqualsValue, reading::ConsistsOf,
                 reading::ElementCount, reading::PortDecl,
                 reading::ConnectsDecl, reading::InitialDecl,
                 reading::TransitionDecl, reading::TriggeredBy,
                 reading::Performs, reading::ShortAnswer, Question>;

struct Sentence {
  std::string text;
  std::vector<Token> tokens;
  Reading reading;
};

struct Diagnostic {
  std::size_t token = 0;   // index of the offending token
  std::size_t offset = 0;  // byte offset of that token in its text
  std::string rule;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Diagnostic> diagnostics;
};

// Syntax check against the grammar above, including count and number
// agreement. A failing report names the first violated rule.
ValidationReport CheckSentence(std::span<const Token> tokens);

// What earlier sentences make available to pronouns and definite phrases.
// Subject "It" refers to the subject of the immediately preceding
// sentence; an object "it" to the single entity that sentence mentions;
// "the initial state" and "a transition" belong to the most recently
// declared automaton.
class Discourse {
 public:
  struct Referent {
    std::optional<std::string> entity;
    std::optional<TransitionRef> transition;
  };

  const std::optional<Referent>& last_subject() const { return last_subject_; }
  const std::vector<std::string>& last_mentions() const {
    return last_mentions_;
  }
  const std::optional<std::string>& current_automaton() const {
    return current_automaton_;
  }

  // Records a parsed sentence. Readings without a subject (answers,
  // questions) leave the context alone.
  void Advance(const Reading& reading);

  std::size_t NextTransitionOrdinal() const { return transitions_; }

 private:
  std::optional<Referent> last_subject_;
  std::vector<std::string> last_mentions_;
  std::optional<std::string> current_automaton_;
  std::size_t transitions_ = 0;
};

// Parses one sentence into its single reading and advances `discourse`.
// Throws Error: kInvalidSentence (fails CheckSentence), kUnresolvedPronoun,
// kUnresolvedReference, kAmbiguousSentence.
Sentence ParseSentence(std::span<const Token> tokens, Discourse* discourse);

// Facts a reading asserts on its own. Transition readings are assembled by
// the document reader instead and return nothing here.
std::vector<Fact> FactsOf(const Reading& reading);

// Surface noun used in answers: "data-type", "constant", "state-automaton"...
std::string_view KindNoun(Kind kind);

}  // namespace acenls

#endif  // ACENLS_GRAMMAR_H_
