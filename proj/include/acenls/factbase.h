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

// Atomic facts about a model. A FactBase is what the generator renders, what
// parsing a generated document recovers, and what questions are answered
// from.

#ifndef ACENLS_FACTBASE_H_
#define ACENLS_FACTBASE_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <utility>
#include <vector>

#include "acenls/model.h"

namespace acenls {

namespace fact {

struct IsDatatype {
  std::string type;
  auto operator<=>(const IsDatatype&) const = default;
};
struct HasElementCount {
  std::string type;
  std::int64_t count = 0;
  auto operator<=>(const HasElementCount&) const = default;
};
struct ElementOf {
  std::string member;
  std::string type;
  auto operator<=>(const ElementOf&) const = default;
};
struct IsConstant {
  std::string name;
  auto operator<=>(const IsConstant&) const = default;
};
struct HasValue {
  std::string name;
  std::int64_t value = 0;
  auto operator<=>(const HasValue&) const = default;
};
struct IsComponent {
  std::string name;
  auto operator<=>(const IsComponent&) const = default;
};
struct Subcomponent {
  std::string parent;
  std::string child;
  auto operator<=>(const Subcomponent&) const = default;
};
struct HasPort {
  std::string component;
  std::string port;
  PortDirection direction = PortDirection::kInput;
  std::string type;
  auto operator<=>(const HasPort&) const = default;
};
struct Connects {
  std::string channel;
  std::string source_component;
  std::string source_port;
  std::string target_component;
  std::string target_port;
  auto operator<=>(const Connects&) const = default;
};
struct IsAutomaton {
  std::string automaton;
  std::string owner;
  auto operator<=>(const IsAutomaton&) const = default;
};
struct HasState {
  std::string automaton;
  std::string state;
  auto operator<=>(const HasState&) const = default;
};
struct IsInitialState {
  std::string automaton;
  std::string state;
  auto operator<=>(const IsInitialState&) const = default;
};
struct HasTransition {
  std::string automaton;
  std::string source;
  std::string target;
  std::optional<std::string> guard;
  std::optional<std::string> action;
  auto operator<=>(const HasTransition&) const = default;
};

}  // namespace fact

using Fact = std::variant<fact::IsDatatype, fact::HasElementCount,
                          fact::ElementOf, fact::IsConstant, fact::HasValue,
                          fact::IsComponent, fact::Subcomponent, fact::HasPort,
                          fact::Connects, fact::IsAutomaton, fact::HasState,
                          fact::IsInitialState, fact::HasTransition>;

// Stable one-line form, e.g. "ElementOf(Walk, pedastrianColor)".
std::string FactToString(const Fact& f);

// Names a fact is about (entity positions only; never guard/action text,
// numbers, directions, or built-in type names).
std::vector<std::string> EntityNames(const Fact& f);

class FactBase {
 public:
  FactBase() = default;

  // Appends `f` unless an equal fact is already present. Returns whether
  // it was added.
  bool Add(Fact f);

  bool Contains(const Fact& f) const { return set_.contains(f); }
  bool empty() const { return facts_.empty(); }
  std::size_t size() const { return facts_.size(); }

  // Insertion order. A temporary base hands its facts over by value, so
  // `for (const Fact& f : ExtractFacts(m).facts())` is safe.
  const std::vector<Fact>& facts() const& { return facts_; }
  std::vector<Fact> facts() && { return std::move(facts_); }

  // Facts mentioning `name` in an entity position, in insertion order.
  std::vector<const Fact*> About(std::string_view name) const;
  bool Knows(std::string_view name) const;

  template <typename T>
  std::vector<const T*> All() const {
    std::vector<const T*> out;
    for (const Fact& f : facts_) {
      if (const T* t = std::get_if<T>(&f)) out.push_back(t);
    }
    return out;
  }

 private:
  std::vector<Fact> facts_;
  std::set<Fact> set_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> index_;
};

// Reduces a valid model to its facts, in generation order: data types,
// constants, components (depth-first), ports, channels, automata.
FactBase ExtractFacts(const Model& model);

// True iff both fact bases hold the same set of facts, ignoring order.
bool FactsEqual(const FactBase& a, const FactBase& b);

// Facts of `a` that are not in `b`, for diagnostics.
std::vector<Fact> FactsMissingFrom(const FactBase& a, const FactBase& b);

}  // namespace acenls

#endif  // ACENLS_FACTBASE_H_
