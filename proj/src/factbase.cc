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

#include "acenls/factbase.h"

#include <algorithm>
#include <initializer_list>

namespace acenls {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string Call(std::string_view name,
                 std::initializer_list<std::string> args) {
  std::string out(name);
  out += '(';
  bool first = true;
  for (const std::string& a : args) {
    if (!first) out += ", ";
    out += a;
    first = false;
  }
  out += ')';
  return out;
}

}  // namespace

std::string FactToString(const Fact& f) {
  return std::visit(
      Overloaded{
          [](const fact::IsDatatype& x) { return Call("IsDatatype", {x.type}); },
          [](const fact::HasElementCount& x) {
            return Call("HasElementCount", {x.type, std::to_string(x.count)});
          },
          [](const fact::ElementOf& x) {
            return Call("ElementOf", {x.member, x.type});
          },
          [](const fact::IsConstant& x) { return Call("IsConstant", {x.name}); },
          [](const fact::HasValue& x) {
            return Call("HasValue", {x.name, std::to_string(x.value)});
          },
          [](const fact::IsComponent& x) {
            return Call("IsComponent", {x.name});
          },
          [](const fact::Subcomponent& x) {
            return Call("Subcomponent", {x.parent, x.child});
          },
          [](const fact::HasPort& x) {
            return Call("HasPort", {x.component, x.port,
                                    std::string(PortDirectionName(x.direction)),
                                    x.type});
          },
          [](const fact::Connects& x) {
            return Call("Connects", {x.channel, x.source_component,
                                     x.source_port, x.target_component,
                                     x.target_port});
          },
          [](const fact::IsAutomaton& x) {
            return Call("IsAutomaton", {x.automaton, x.owner});
          },
          [](const fact::HasState& x) {
            return Call("HasState", {x.automaton, x.state});
          },
          [](const fact::IsInitialState& x) {
            return Call("IsInitialState", {x.automaton, x.state});
          },
          [](const fact::HasTransition& x) {
            std::string guard = x.guard ? "guard: " + *x.guard : "";
            std::string action = x.action ? "action: " + *x.action : "";
            if (x.guard && x.action) {
              return Call("HasTransition",
                          {x.automaton, x.source, x.target, guard, action});
            }
            if (x.guard) {
              return Call("HasTransition",
                          {x.automaton, x.source, x.target, guard});
            }
            if (x.action) {
              return Call("HasTransition",
                          {x.automaton, x.source, x.target, action});
            }
            return Call("HasTransition", {x.automaton, x.source, x.target});
          },
      },
      f);
}

std::vector<std::string> EntityNames(const Fact& f) {
  return std::visit(
      Overloaded{
          [](const fact::IsDatatype& x) -> std::vector<std::string> {
            return {x.type};
          },
          [](const fact::HasElementCount& x) -> std::vector<std::string> {
            return {x.type};
          },
          [](const fact::ElementOf& x) -> std::vector<std::string> {
            return {x.member, x.type};
          },
          [](const fact::IsConstant& x) -> std::vector<std::string> {
            return {x.name};
          },
          [](const fact::HasValue& x) -> std::vector<std::string> {
            return {x.name};
          },
          [](const fact::IsComponent& x) -> std::vector<std::string> {
            return {x.name};
          },
          [](const fact::Subcomponent& x) -> std::vector<std::string> {
            return {x.parent, x.child};
          },
          [](const fact::HasPort& x) -> std::vector<std::string> {
            if (IsBuiltinType(x.type)) return {x.component, x.port};
            return {x.component, x.port, x.type};
          },
          [](const fact::Connects& x) -> std::vector<std::string> {
            return {x.channel, x.source_component, x.source_port,
                    x.target_component, x.target_port};
          },
          [](const fact::IsAutomaton& x) -> std::vector<std::string> {
            return {x.automaton, x.owner};
          },
          [](const fact::HasState& x) -> std::vector<std::string> {
            return {x.automaton, x.state};
          },
          [](const fact::IsInitialState& x) -> std::vector<std::string> {
            return {x.automaton, x.state};
          },
          [](const fact::HasTransition& x) -> std::vector<std::string> {
            return {x.automaton, x.source, x.target};
          },
      },
      f);
}

bool FactBase::Add(Fact f) {
  if (set_.contains(f)) return false;
  const std::size_t position = facts_.size();
  for (std::string& name : EntityNames(f)) {
    auto& slots = index_[std::move(name)];
    if (slots.empty() || slots.back() != position) slots.push_back(position);
  }
  set_.insert(f);
  facts_.push_back(std::move(f));
  return true;
}

std::vector<const Fact*> FactBase::About(std::string_view name) const {
  std::vector<const Fact*> out;
  auto it = index_.find(name);
  if (it == index_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&facts_[i]);
  return out;
}

bool FactBase::Knows(std::string_view name) const {
  return index_.find(name) != index_.end();
}

FactBase ExtractFacts(const Model& model) {
  FactBase facts;
  if (model.data_dictionary) {
    for (const EnumerationType& e : model.data_dictionary->enumerations) {
      facts.Add(fact::IsDatatype{e.name});
      facts.Add(fact::HasElementCount{
          e.name, static_cast<std::int64_t>(e.members.size())});
      for (const std::string& m : e.members) {
        facts.Add(fact::ElementOf{m, e.name});
      }
    }
    for (const ConstantFunction& c : model.data_dictionary->constants) {
      facts.Add(fact::IsConstant{c.name});
      facts.Add(fact::HasValue{c.name, c.value});
    }
  }

  const std::vector<const Component*> components = ComponentsDepthFirst(model);
  for (const Component* c : components) {
    facts.Add(fact::IsComponent{c->name});
    for (const Component& child : c->subcomponents) {
      facts.Add(fact::Subcomponent{c->name, child.name});
    }
  }
  for (const Component* c : components) {
    for (const Port& p : c->ports) {
      facts.Add(fact::HasPort{c->name, p.name, p.direction, p.type_name});
    }
  }
  for (const Component* c : components) {
    for (const Channel& ch : c->channels) {
      facts.Add(fact::Connects{ch.name, ch.source.component, ch.source.port,
                               ch.target.component, ch.target.port});
    }
  }

  for (const StateAutomaton& a : model.automata) {
    facts.Add(fact::IsAutomaton{a.name, a.owner});
    for (const std::string& s : a.states) {
      facts.Add(fact::HasState{a.name, s});
    }
    facts.Add(fact::IsInitialState{a.name, a.initial_state});
    for (const Transition& t : a.transitions) {
      facts.Add(
          fact::HasTransition{a.name, t.source, t.target, t.guard, t.action});
    }
  }
  return facts;
}

bool FactsEqual(const FactBase& a, const FactBase& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.facts().begin(), a.facts().end(),
                     [&b](const Fact& f) { return b.Contains(f); });
}

std::vector<Fact> FactsMissingFrom(const FactBase& a, const FactBase& b) {
  std::vector<Fact> out;
  for (const Fact& f : a.facts()) {
    if (!b.Contains(f)) out.push_back(f);
  }
  return out;
}

}  // namespace acenls
