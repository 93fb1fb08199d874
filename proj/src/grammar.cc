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

#include "acenls/grammar.h"

#include <algorithm>
#include <utility>

namespace acenls {

std::string_view KindNoun(Kind kind) {
  switch (kind) {
    case Kind::kDatatype: return "data-type";
    case Kind::kConstant: return "constant";
    case Kind::kComponent: return "component";
    case Kind::kChannel: return "channel";
    case Kind::kStateAutomaton: return "state-automaton";
  }
  return "?";
}

namespace {

struct Violation {
  Diagnostic diagnostic;
};

std::optional<Kind> KindOfLexeme(std::string_view lex) {
  if (lex == lexeme::kDatatype) return Kind::kDatatype;
  if (lex == lexeme::kConstant) return Kind::kConstant;
  if (lex == lexeme::kComponent) return Kind::kComponent;
  if (lex == lexeme::kChannel) return Kind::kChannel;
  if (lex == lexeme::kStateAutomaton) return Kind::kStateAutomaton;
  return std::nullopt;
}

std::string Quoted(const Token& t) { return "'" + t.surface + "'"; }

bool StartsWithVowel(std::string_view word) {
  if (word.empty()) return false;
  const char c = static_cast<char>(ToLower(word.substr(0, 1))[0]);
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Recursive-descent matcher over one sentence. Every failure throws a
// Violation naming the rule and the offending token.
class Matcher {
 public:
  explicit Matcher(std::span<const Token> tokens) : t_(tokens) {}

  Reading Run() {
    if (t_.empty()) FailAt(0, "sentence", "empty sentence");
    const auto term = std::find_if(t_.begin(), t_.end(),
                                   [](const Token& t) { return t.IsTerminator(); });
    if (term == t_.end()) {
      FailAt(t_.size(), "terminator",
             "sentence must end with '.' or '?'");
    }
    const auto term_index = static_cast<std::size_t>(term - t_.begin());
    if (term_index + 1 != t_.size()) {
      FailAt(term_index + 1, "terminator",
             "exactly one sentence expected; words follow the terminator");
    }
    end_ = term_index;
    if (end_ == 0) FailAt(0, "sentence", "empty sentence");
    if (t_[end_].surface == "?") return Question();
    return TopDeclarative();
  }

 private:
  // --- cursor -----------------------------------------------------------

  bool AtEnd() const { return pos_ >= end_; }
  const Token* Peek(std::size_t k = 0) const {
    return pos_ + k < end_ ? &t_[pos_ + k] : nullptr;
  }

  [[noreturn]] void FailAt(std::size_t index, std::string rule,
                           std::string message) const {
    Diagnostic d;
    d.token = index;
    if (index < t_.size()) {
      d.offset = t_[index].offset;
    } else if (!t_.empty()) {
      d.offset = t_.back().offset + t_.back().surface.size();
    }
    d.rule = std::move(rule);
    d.message = std::move(message);
    throw Violation{std::move(d)};
  }
  [[noreturn]] void Fail(std::string rule, std::string message) const {
    FailAt(pos_, std::move(rule), std::move(message));
  }

  // The current token; fails with `what` if the sentence ends here.
  const Token& Next(const std::string& rule, const std::string& what) {
    if (AtEnd()) Fail(rule, "sentence ends before " + what);
    return t_[pos_++];
  }

  void ExpectFunction(std::string_view phrase, const std::string& rule) {
    const std::string what = "'" + std::string(phrase) + "'";
    const Token& t = Next(rule, what);
    if (!t.IsFunction(phrase)) {
      Back();
      Fail(rule, "expected " + what + ", found " + Quoted(t));
    }
  }

  const Token& ExpectContent(Category c, std::string_view lex,
                             const std::string& rule, const std::string& what) {
    const Token& t = Next(rule, what);
    if (!t.IsContent(c, lex)) {
      Back();
      Fail(rule, "expected " + what + ", found " + Quoted(t));
    }
    return t;
  }

  void Back() { --pos_; }

  void ExpectEnd() {
    if (!AtEnd()) {
      Fail("sentence-end",
           "unexpected " + Quoted(*Peek()) + " after a complete sentence");
    }
  }

  // "is" for singular subjects.
  void ExpectIs(const std::string& rule) {
    const Token& t = Next(rule, "'is'");
    if (!t.IsFunction(FunctionRole::kBe)) {
      Back();
      Fail(rule, "expected 'is', found " + Quoted(t));
    }
    if (t.phrase != "is") {
      Back();
      Fail("number-agreement", "a singular subject takes 'is', not " + Quoted(t));
    }
  }

  // "a" or "an", agreeing with the following word.
  void ExpectArticle(const std::string& rule) {
    const Token& t = Next(rule, "'a' or 'an'");
    if (!t.IsFunction("a") && !t.IsFunction("an")) {
      Back();
      Fail(rule, "expected 'a' or 'an', found " + Quoted(t));
    }
    if (const Token* next = Peek()) {
      const bool vowel = StartsWithVowel(next->surface);
      if (vowel != (t.phrase == "an")) {
        Back();
        Fail("article", std::string("use '") + (vowel ? "an" : "a") +
                            "' before " + Quoted(*next));
      }
    }
  }

  Ref ParseRef(const std::string& rule, bool allow_builtin_type = false) {
    const Token& t = Next(rule, "a name");
    Ref r;
    r.token = pos_ - 1;
    if (t.kind == TokenKind::kProperName) {
      r.name = t.surface;
      r.kind = Ref::Kind::kName;
      return r;
    }
    if (t.IsFunction("it")) {
      r.kind = Ref::Kind::kObjectPronoun;
      return r;
    }
    if (allow_builtin_type && (t.IsContent(Category::kNoun, lexeme::kInteger) ||
                               t.IsContent(Category::kNoun, lexeme::kBoolean))) {
      r.name = t.lexeme == lexeme::kInteger ? std::string(kBuiltinIntegerType)
                                            : std::string(kBuiltinBooleanType);
      r.kind = Ref::Kind::kBuiltinType;
      return r;
    }
    Back();
    Fail(rule, "expected a name, found " + Quoted(t));
  }

  // A name used as it is written: no pronoun allowed (questions).
  std::string ParseName(const std::string& rule) {
    const Token& t = Next(rule, "a name");
    if (t.kind != TokenKind::kProperName) {
      Back();
      Fail(rule, "expected a name, found " + Quoted(t));
    }
    return t.surface;
  }

  std::int64_t ParseCount(const std::string& rule) {
    const Token& t = Next(rule, "a count");
    if (t.IsFunction("one")) return 1;
    if (t.kind == TokenKind::kNumber) {
      if (t.value <= 0) {
        Back();
        Fail(rule, "a count must be positive, found " + Quoted(t));
      }
      return t.value;
    }
    Back();
    Fail(rule, "expected a count ('one' or digits), found " + Quoted(t));
  }

  // NAME ((',' ['and'] | 'and') NAME)*
  std::vector<Ref> ParseList(const std::string& rule) {
    std::vector<Ref> items;
    items.push_back(ParseRef(rule));
    while (!AtEnd()) {
      const Token& sep = *Peek();
      if (sep.kind == TokenKind::kComma) {
        ++pos_;
        if (Peek() != nullptr && Peek()->IsFunction("and")) ++pos_;
      } else if (sep.IsFunction("and")) {
        ++pos_;
      } else {
        break;
      }
      items.push_back(ParseRef(rule));
    }
    return items;
  }

  // --- declaratives -----------------------------------------------------

  Reading TopDeclarative() {
    const Token& first = t_[0];
    if (first.IsFunction(FunctionRole::kResponse) || first.IsFunction("no")) {
      return ShortAnswer();
    }
    if (first.IsFixed("it is true that")) {
      ++pos_;
      if (AtEnd()) Fail("declarative", "sentence ends after 'It is true that'");
    }
    return Declarative();
  }

  Reading ShortAnswer() {
    const bool yes = t_[0].IsFunction(FunctionRole::kResponse);
    ++pos_;
    const Token& comma = Next("short-answer", "','");
    if (comma.kind != TokenKind::kComma) {
      Back();
      Fail("short-answer", "expected ',' after " + Quoted(t_[0]));
    }
    ExpectFunction("it", "short-answer");
    ExpectIs("short-answer");
    if (!yes) ExpectFunction("not", "short-answer");
    ExpectEnd();
    return reading::ShortAnswer{yes};
  }

  Reading Declarative() {
    const Token& first = *Peek();
    if (first.IsFixed("there is")) return ThereIs();
    if (first.IsFunction("the")) return InitialState();

    Ref subject;
    subject.token = pos_;
    if (first.kind == TokenKind::kProperName) {
      subject.name = first.surface;
    } else if (first.IsFunction("it")) {
      subject.kind = Ref::Kind::kSubjectPronoun;
    } else if (first.IsFunction(FunctionRole::kPronoun)) {
      Fail("declarative-subject",
           "only 'It' may refer to an earlier subject, found " + Quoted(first));
    } else {
      Fail("declarative-subject", "declarative must begin with noun phrase");
    }
    ++pos_;
    if (AtEnd()) Fail("verb-phrase", "sentence ends after the subject");

    const Token& verb = *Peek();
    if (verb.IsFunction(FunctionRole::kBe)) return Copula(subject);
    if (verb.IsContent(Category::kVerb, lexeme::kConsistsOf)) {
      ++pos_;
      return ConsistsOf(subject);
    }
    if (verb.IsContent(Category::kVerb, lexeme::kHave)) {
      if (verb.number != GrammaticalNumber::kSingular) {
        Fail("number-agreement", "a singular subject takes 'has', not " + Quoted(verb));
      }
      ++pos_;
      return Has(subject);
    }
    if (verb.IsContent(Category::kVerb, lexeme::kConnects)) {
      ++pos_;
      return Connects(subject);
    }
    if (verb.IsContent(Category::kVerb, lexeme::kPerforms)) {
      ++pos_;
      reading::Performs r{subject, std::nullopt, ParseOpaque("performs")};
      ExpectEnd();
      return r;
    }
    if (verb.IsFunction(FunctionRole::kModal)) {
      Fail("verb-phrase", "modal verbs are outside the supported subset");
    }
    Fail("verb-phrase", "expected a verb phrase after the subject, found " +
                            Quoted(verb));
  }

  // A guard or action: one content word, name or number.
  std::string ParseOpaque(const std::string& rule) {
    const Token& t = Next(rule, "a guard or action");
    if (t.kind == TokenKind::kContentWord || t.kind == TokenKind::kProperName ||
        t.kind == TokenKind::kNumber) {
      return t.surface;
    }
    Back();
    Fail(rule, "expected a single word, found " + Quoted(t));
  }

  Reading Copula(const Ref& subject) {
    ExpectIs("copula");
    if (AtEnd()) Fail("copula", "sentence ends after 'is'");
    const Token& next = *Peek();
    if (next.IsFunction(FunctionRole::kNegation)) {
      Fail("copula", "negated declaratives are outside the supported subset");
    }
    if (next.IsContent(Category::kAdjective, lexeme::kEqual)) {
      ++pos_;
      ExpectContent(Category::kPreposition, lexeme::kTo, "equals", "'to'");
      const Token& n = Next("equals", "a number");
      if (n.kind != TokenKind::kNumber) {
        Back();
        Fail("equals", "expected a number, found " + Quoted(n));
      }
      ExpectEnd();
      return reading::EqualsValue{subject, n.value};
    }
    if (next.IsContent(Category::kAdjective, lexeme::kTriggeredBy)) {
      ++pos_;
      reading::TriggeredBy r{subject, std::nullopt, ParseOpaque("triggered-by")};
      ExpectEnd();
      return r;
    }
    if (!next.IsFunction("a") && !next.IsFunction("an")) {
      Fail("copula", "expected 'a', 'an', 'equal' or 'triggered-by' after 'is', found " +
                         Quoted(next));
    }
    ExpectArticle("copula");
    const Token& noun = Next("copula", "a noun");
    if (!noun.IsContent(Category::kNoun)) {
      Back();
      Fail("copula", "expected a noun, found " + Quoted(noun));
    }
    if (noun.number != GrammaticalNumber::kSingular) {
      Back();
      Fail("number-agreement", "'a' takes a singular noun, not " + Quoted(noun));
    }
    if (std::optional<Kind> kind = KindOfLexeme(noun.lexeme)) {
      if (AtEnd()) return reading::KindDecl{subject, *kind};
      if (*kind != Kind::kStateAutomaton) ExpectEnd();
      ExpectContent(Category::kPreposition, lexeme::kOf, "automaton-owner", "'of'");
      ExpectFunction("the", "automaton-owner");
      ExpectContent(Category::kNoun, lexeme::kComponent, "automaton-owner",
                    "'component'");
      Ref owner = ParseRef("automaton-owner");
      ExpectEnd();
      return reading::AutomatonDecl{subject, owner};
    }
    Role role;
    if (noun.lexeme == lexeme::kElement) {
      role = Role::kElement;
    } else if (noun.lexeme == lexeme::kState) {
      role = Role::kState;
    } else if (noun.lexeme == lexeme::kPort) {
      role = Role::kPort;
    } else {
      Back();
      Fail("copula", Quoted(noun) + " cannot follow 'is a'");
    }
    ExpectContent(Category::kPreposition, lexeme::kOf, "role-of", "'of'");
    Ref owner = ParseRef("role-of");
    ExpectEnd();
    return reading::RoleOf{subject, role, owner};
  }

  // Count, noun and verb agree; returns the noun token.
  const Token& CountedNoun(std::int64_t count, const std::string& rule) {
    const Token& noun = Next(rule, "a noun");
    if (!noun.IsContent(Category::kNoun)) {
      Back();
      Fail(rule, "expected a noun, found " + Quoted(noun));
    }
    const GrammaticalNumber want =
        count == 1 ? GrammaticalNumber::kSingular : GrammaticalNumber::kPlural;
    if (noun.number != want) {
      Back();
      Fail("number-agreement",
           std::string("a count of ") + std::to_string(count) + " takes the " +
               (count == 1 ? "singular" : "plural") + " noun, not " +
               Quoted(noun));
    }
    return noun;
  }

  Reading ConsistsOf(const Ref& subject) {
    const std::int64_t count = ParseCount("consists-of");
    const Token& noun = CountedNoun(count, "consists-of");
    Part part;
    if (noun.lexeme == lexeme::kElement) {
      part = Part::kElement;
    } else if (noun.lexeme == lexeme::kState) {
      part = Part::kState;
    } else if (noun.lexeme == lexeme::kComponent) {
      part = Part::kComponent;
    } else {
      Back();
      Fail("consists-of", "only elements, states or components can be parts, not " +
                              Quoted(noun));
    }
    ExpectFunction("that", "consists-of");
    const Token& be = Next("consists-of", "'is' or 'are'");
    if (!be.IsFunction(FunctionRole::kBe)) {
      Back();
      Fail("consists-of", "expected 'is' or 'are', found " + Quoted(be));
    }
    const std::string want = count == 1 ? "is" : "are";
    if (be.phrase != want) {
      Back();
      Fail("number-agreement", "a count of " + std::to_string(count) +
                                   " takes '" + want + "', not " + Quoted(be));
    }
    const std::size_t list_start = pos_;
    std::vector<Ref> members = ParseList("consists-of");
    if (static_cast<std::int64_t>(members.size()) != count) {
      FailAt(list_start, "count-agreement",
             "the count " + std::to_string(count) + " does not match the " +
                 std::to_string(members.size()) + " listed names");
    }
    ExpectEnd();
    return reading::ConsistsOf{subject, count, part, std::move(members)};
  }

  Reading Has(const Ref& subject) {
    if (AtEnd()) Fail("has", "sentence ends after 'has'");
    const Token& next = *Peek();
    if (next.IsFunction("one") || next.kind == TokenKind::kNumber) {
      const std::int64_t count = ParseCount("has");
      const Token& noun = CountedNoun(count, "has");
      if (noun.lexeme != lexeme::kElement) {
        Back();
        Fail("has", "only elements can be counted, not " + Quoted(noun));
      }
      ExpectEnd();
      return reading::ElementCount{subject, count};
    }
    ExpectArticle("port");
    const Token& dir = Next("port", "'input' or 'output'");
    PortDirection direction;
    if (dir.IsContent(Category::kAdjective, lexeme::kInput)) {
      direction = PortDirection::kInput;
    } else if (dir.IsContent(Category::kAdjective, lexeme::kOutput)) {
      direction = PortDirection::kOutput;
    } else {
      Back();
      Fail("port", "expected 'input' or 'output', found " + Quoted(dir));
    }
    ExpectContent(Category::kNoun, lexeme::kPort, "port", "'port'");
    Ref port = ParseRef("port");
    ExpectContent(Category::kPreposition, lexeme::kOf, "port", "'of'");
    ExpectContent(Category::kNoun, lexeme::kType, "port", "'type'");
    Ref type = ParseRef("port", /*allow_builtin_type=*/true);
    ExpectEnd();
    return reading::PortDecl{subject, direction, port, type};
  }

  Reading Connects(const Ref& subject) {
    auto endpoint = [&](std::pair<Ref, Ref>* out) {
      ExpectFunction("the", "connects");
      ExpectContent(Category::kNoun, lexeme::kPort, "connects", "'port'");
      out->second = ParseRef("connects");
      ExpectContent(Category::kPreposition, lexeme::kOf, "connects", "'of'");
      out->first = ParseRef("connects");
    };
    std::pair<Ref, Ref> source;
    std::pair<Ref, Ref> target;
    endpoint(&source);
    ExpectContent(Category::kPreposition, lexeme::kTo, "connects", "'to'");
    endpoint(&target);
    ExpectEnd();
    return reading::ConnectsDecl{subject, source.first, source.second,
                                 target.first, target.second};
  }

  Reading ThereIs() {
    ++pos_;
    ExpectArticle("there-is");
    ExpectContent(Category::kNoun, lexeme::kTransition, "there-is",
                  "'transition'");
    ExpectContent(Category::kPreposition, lexeme::kFrom, "there-is", "'from'");
    Ref source = ParseRef("there-is");
    ExpectContent(Category::kPreposition, lexeme::kTo, "there-is", "'to'");
    Ref target = ParseRef("there-is");
    ExpectEnd();
    return reading::TransitionDecl{TransitionRef{}, source, target};
  }

  Reading InitialState() {
    ++pos_;
    ExpectContent(Category::kAdjective, lexeme::kInitial, "initial-state",
                  "'initial'");
    ExpectContent(Category::kNoun, lexeme::kState, "initial-state", "'state'");
    ExpectIs("initial-state");
    Ref state = ParseRef("initial-state");
    ExpectEnd();
    return reading::InitialDecl{std::string(), state};
  }

  // --- questions --------------------------------------------------------

  Reading Question() {
    const Token& first = *Peek();
    if (first.IsFunction("how much")) {
      return acenls::Question{question::Unsupported{
          "'how much' questions have no mass nouns to ask about"}};
    }
    if (first.IsFunction("how many")) return HowMany();
    if (first.IsFunction(FunctionRole::kQueryWord)) return WhQuestion();
    if (first.IsFunction(FunctionRole::kBe)) return YesNo();
    Fail("question", "a question must begin with a query word or 'is'");
  }

  Reading WhQuestion() {
    const Token& word = t_[pos_++];
    ExpectIs("wh-question");
    const Token* subject = Peek();
    if (subject != nullptr && subject->IsFunction("it")) {
      ++pos_;
      ExpectEnd();
      return acenls::Question{question::Unsupported{
          "questions cannot refer back to earlier questions"}};
    }
    std::string name = ParseName("wh-question");
    ExpectEnd();
    if (word.phrase == "what") return acenls::Question{question::WhatIs{name}};
    return acenls::Question{question::Unsupported{
        "'" + word.phrase + "' questions are not answerable"}};
  }

  Reading HowMany() {
    ++pos_;
    const Token& noun = Next("how-many", "a plural noun");
    if (!noun.IsContent(Category::kNoun)) {
      Back();
      Fail("how-many", "expected a plural noun, found " + Quoted(noun));
    }
    if (noun.number != GrammaticalNumber::kPlural) {
      Back();
      Fail("number-agreement", "'how many' takes a plural noun, not " + Quoted(noun));
    }
    ExpectFunction("does", "how-many");
    std::string name = ParseName("how-many");
    const Token& verb = ExpectContent(Category::kVerb, lexeme::kHave, "how-many",
                                      "'have'");
    if (verb.number != GrammaticalNumber::kPlural) {
      Back();
      Fail("number-agreement", "'does' takes 'have', not " + Quoted(verb));
    }
    ExpectEnd();
    if (noun.lexeme != lexeme::kElement) {
      return acenls::Question{question::Unsupported{
          "only elements can be counted, not " + Quoted(noun)}};
    }
    return acenls::Question{question::HowManyElements{name}};
  }

  Reading YesNo() {
    ExpectIs("yes-no-question");
    std::string name = ParseName("yes-no-question");
    ExpectArticle("yes-no-question");
    const Token& noun = Next("yes-no-question", "a noun");
    if (!noun.IsContent(Category::kNoun) ||
        noun.number != GrammaticalNumber::kSingular) {
      Back();
      Fail("yes-no-question", "expected a singular noun, found " + Quoted(noun));
    }
    if (std::optional<Kind> kind = KindOfLexeme(noun.lexeme)) {
      ExpectEnd();
      return acenls::Question{question::IsA{name, *kind}};
    }
    if (noun.lexeme != lexeme::kElement && noun.lexeme != lexeme::kState &&
        noun.lexeme != lexeme::kPort) {
      Back();
      Fail("yes-no-question", Quoted(noun) + " cannot follow 'is a'");
    }
    ExpectContent(Category::kPreposition, lexeme::kOf, "yes-no-question", "'of'");
    std::string owner = ParseName("yes-no-question");
    ExpectEnd();
    if (noun.lexeme == lexeme::kElement) {
      return acenls::Question{question::IsElementOf{name, owner}};
    }
    return acenls::Question{question::Unsupported{
        "membership questions are answerable for elements only"}};
  }

  std::span<const Token> t_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
};

// --- discourse resolution -------------------------------------------------

SourceLocation At(std::span<const Token> tokens, std::size_t index) {
  if (index < tokens.size()) return SourceLocation{0, tokens[index].offset + 1};
  return SourceLocation{};
}

class Resolver {
 public:
  Resolver(std::span<const Token> tokens, const Discourse& discourse)
      : tokens_(tokens), d_(discourse) {}

  void Subject(Ref* r) {
    if (r->kind != Ref::Kind::kSubjectPronoun) return;
    const auto& last = d_.last_subject();
    if (!last) {
      throw Error(ErrorCode::kUnresolvedPronoun,
                  "'It' has no preceding subject to refer to",
                  At(tokens_, r->token));
    }
    if (!last->entity) {
      throw Error(ErrorCode::kUnresolvedPronoun,
                  "'It' refers to the preceding transition, which cannot take "
                  "this verb phrase",
                  At(tokens_, r->token));
    }
    r->name = *last->entity;
  }

  void Object(Ref* r) {
    if (r->kind != Ref::Kind::kObjectPronoun) return;
    std::vector<std::string> candidates = d_.last_mentions();
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    if (candidates.empty()) {
      throw Error(ErrorCode::kUnresolvedPronoun,
                  "'it' has no antecedent in the preceding sentence",
                  At(tokens_, r->token));
    }
    if (candidates.size() > 1) {
      std::string list;
      for (const std::string& c : candidates) {
        if (!list.empty()) list += ", ";
        list += c;
      }
      throw Error(ErrorCode::kAmbiguousSentence,
                  "'it' could refer to any of " + list,
                  At(tokens_, r->token));
    }
    r->name = candidates.front();
  }

  TransitionRef Transition(const Ref& subject) {
    const auto& last = d_.last_subject();
    if (subject.kind != Ref::Kind::kSubjectPronoun) {
      throw Error(ErrorCode::kUnresolvedReference,
                  "only a transition can be triggered or perform an action; "
                  "refer to it with 'It'",
                  At(tokens_, subject.token));
    }
    if (!last) {
      throw Error(ErrorCode::kUnresolvedPronoun,
                  "'It' has no preceding subject to refer to",
                  At(tokens_, subject.token));
    }
    if (!last->transition) {
      throw Error(ErrorCode::kUnresolvedReference,
                  "'It' must refer to a transition here",
                  At(tokens_, subject.token));
    }
    return *last->transition;
  }

  std::string Automaton() {
    if (!d_.current_automaton()) {
      throw Error(ErrorCode::kUnresolvedReference,
                  "no state-automaton has been introduced yet",
                  At(tokens_, 0));
    }
    return *d_.current_automaton();
  }

  void operator()(reading::KindDecl& r) { Subject(&r.subject); }
  void operator()(reading::AutomatonDecl& r) {
    Subject(&r.automaton);
    Object(&r.owner);
  }
  void operator()(reading::RoleOf& r) {
    Subject(&r.subject);
    Object(&r.owner);
  }
  void operator()(reading::EqualsValue& r) { Subject(&r.subject); }
  void operator()(reading::ConsistsOf& r) {
    Subject(&r.subject);
    for (Ref& m : r.members) Object(&m);
  }
  void operator()(reading::ElementCount& r) { Subject(&r.subject); }
  void operator()(reading::PortDecl& r) {
    Subject(&r.component);
    Object(&r.port);
    Object(&r.type);
  }
  void operator()(reading::ConnectsDecl& r) {
    Subject(&r.channel);
    Object(&r.source_component);
    Object(&r.source_port);
    Object(&r.target_component);
    Object(&r.target_port);
  }
  void operator()(reading::InitialDecl& r) {
    Object(&r.state);
    r.automaton = Automaton();
  }
  void operator()(reading::TransitionDecl& r) {
    Object(&r.source);
    Object(&r.target);
    r.transition = TransitionRef{Automaton(), r.source.name, r.target.name,
                                 d_.NextTransitionOrdinal()};
  }
  void operator()(reading::TriggeredBy& r) { r.transition = Transition(r.subject); }
  void operator()(reading::Performs& r) { r.transition = Transition(r.subject); }
  void operator()(reading::ShortAnswer&) {}
  void operator()(Question&) {}

 private:
  std::span<const Token> tokens_;
  const Discourse& d_;
};

void AddName(const Ref& r, std::vector<std::string>* out) {
  if (r.kind != Ref::Kind::kBuiltinType && !r.name.empty()) out->push_back(r.name);
}

}  // namespace

ValidationReport CheckSentence(std::span<const Token> tokens) {
  ValidationReport report;
  try {
    Matcher(tokens).Run();
  } catch (const Violation& v) {
    report.ok = false;
    report.diagnostics.push_back(v.diagnostic);
  }
  return report;
}

void Discourse::Advance(const Reading& rd) {
  if (std::holds_alternative<reading::ShortAnswer>(rd) ||
      std::holds_alternative<Question>(rd)) {
    return;
  }
  auto entity = [](const Ref& r) { return Referent{r.name, std::nullopt}; };
  std::vector<std::string> mentions;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, reading::KindDecl>) {
          last_subject_ = entity(r.subject);
          AddName(r.subject, &mentions);
          if (r.kind == Kind::kStateAutomaton) current_automaton_ = r.subject.name;
        } else if constexpr (std::is_same_v<T, reading::AutomatonDecl>) {
          last_subject_ = entity(r.automaton);
          AddName(r.automaton, &mentions);
          AddName(r.owner, &mentions);
          current_automaton_ = r.automaton.name;
        } else if constexpr (std::is_same_v<T, reading::RoleOf>) {
          last_subject_ = entity(r.subject);
          AddName(r.subject, &mentions);
          AddName(r.owner, &mentions);
        } else if constexpr (std::is_same_v<T, reading::EqualsValue> ||
                             std::is_same_v<T, reading::ElementCount>) {
          last_subject_ = entity(r.subject);
          AddName(r.subject, &mentions);
        } else if constexpr (std::is_same_v<T, reading::ConsistsOf>) {
          last_subject_ = entity(r.subject);
          AddName(r.subject, &mentions);
          for (const Ref& m : r.members) AddName(m, &mentions);
        } else if constexpr (std::is_same_v<T, reading::PortDecl>) {
          last_subject_ = entity(r.component);
          AddName(r.component, &mentions);
          AddName(r.port, &mentions);
          AddName(r.type, &mentions);
        } else if constexpr (std::is_same_v<T, reading::ConnectsDecl>) {
          last_subject_ = entity(r.channel);
          for (const Ref* x : {&r.channel, &r.source_component, &r.source_port,
                               &r.target_component, &r.target_port}) {
            AddName(*x, &mentions);
          }
        } else if constexpr (std::is_same_v<T, reading::InitialDecl>) {
          last_subject_ = entity(r.state);
          AddName(r.state, &mentions);
        } else if constexpr (std::is_same_v<T, reading::TransitionDecl>) {
          last_subject_ = Referent{std::nullopt, r.transition};
          AddName(r.source, &mentions);
          AddName(r.target, &mentions);
          ++transitions_;
        } else if constexpr (std::is_same_v<T, reading::TriggeredBy> ||
                             std::is_same_v<T, reading::Performs>) {
          last_subject_ = Referent{std::nullopt, r.transition};
        }
      },
      rd);
  last_mentions_ = std::move(mentions);
}

Sentence ParseSentence(std::span<const Token> tokens, Discourse* discourse) {
  Reading rd;
  try {
    rd = Matcher(tokens).Run();
  } catch (const Violation& v) {
    throw Error(ErrorCode::kInvalidSentence,
                v.diagnostic.rule + ": " + v.diagnostic.message,
                SourceLocation{0, v.diagnostic.offset + 1});
  }
  Discourse scratch;
  Discourse& d = discourse != nullptr ? *discourse : scratch;
  std::visit(Resolver(tokens, d), rd);
  d.Advance(rd);
  return Sentence{JoinTokens(tokens),
                  std::vector<Token>(tokens.begin(), tokens.end()),
                  std::move(rd)};
}

std::vector<Fact> FactsOf(const Reading& rd) {
  std::vector<Fact> out;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, reading::KindDecl>) {
          if (r.kind == Kind::kDatatype) out.push_back(fact::IsDatatype{r.subject.name});
          if (r.kind == Kind::kConstant) out.push_back(fact::IsConstant{r.subject.name});
          if (r.kind == Kind::kComponent) out.push_back(fact::IsComponent{r.subject.name});
        } else if constexpr (std::is_same_v<T, reading::AutomatonDecl>) {
          out.push_back(fact::IsAutomaton{r.automaton.name, r.owner.name});
        } else if constexpr (std::is_same_v<T, reading::RoleOf>) {
          if (r.role == Role::kElement) {
            out.push_back(fact::ElementOf{r.subject.name, r.owner.name});
          } else if (r.role == Role::kState) {
            out.push_back(fact::HasState{r.owner.name, r.subject.name});
          }
        } else if constexpr (std::is_same_v<T, reading::EqualsValue>) {
          out.push_back(fact::HasValue{r.subject.name, r.value});
        } else if constexpr (std::is_same_v<T, reading::ConsistsOf>) {
          if (r.part == Part::kElement) {
            out.push_back(fact::HasElementCount{r.subject.name, r.count});
          }
          for (const Ref& m : r.members) {
            switch (r.part) {
              case Part::kElement:
                out.push_back(fact::ElementOf{m.name, r.subject.name});
                break;
              case Part::kState:
                out.push_back(fact::HasState{r.subject.name, m.name});
                break;
              case Part::kComponent:
                out.push_back(fact::Subcomponent{r.subject.name, m.name});
                break;
            }
          }
        } else if constexpr (std::is_same_v<T, reading::ElementCount>) {
          out.push_back(fact::HasElementCount{r.subject.name, r.count});
        } else if constexpr (std::is_same_v<T, reading::PortDecl>) {
          out.push_back(fact::HasPort{r.component.name, r.port.name, r.direction,
                                      r.type.name});
        } else if constexpr (std::is_same_v<T, reading::ConnectsDecl>) {
          out.push_back(fact::Connects{r.channel.name, r.source_component.name,
                                       r.source_port.name, r.target_component.name,
                                       r.target_port.name});
        } else if constexpr (std::is_same_v<T, reading::InitialDecl>) {
          out.push_back(fact::IsInitialState{r.automaton, r.state.name});
        }
      },
      rd);
  return out;
}

}  // namespace acenls
