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

// In-memory form of an AutoFocus3-style model file. See docs/model-schema.md
// for the accepted XML vocabulary.

#ifndef ACENLS_MODEL_H_
#define ACENLS_MODEL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acenls {

struct EnumerationType {
  std::string name;
  std::vector<std::string> members;  // nonempty, document order

  friend bool operator==(const EnumerationType&,
                         const EnumerationType&) = default;
};

enum class ReturnType { kInteger };

struct ConstantFunction {
  std::string name;
  std::int64_t value = 0;
  ReturnType return_type = ReturnType::kInteger;

  friend bool operator==(const ConstantFunction&,
                         const ConstantFunction&) = default;
};

struct DataDictionary {
  std::vector<EnumerationType> enumerations;
  std::vector<ConstantFunction> constants;

  bool empty() const { return enumerations.empty() && constants.empty(); }

  friend bool operator==(const DataDictionary&,
                         const DataDictionary&) = default;
};

enum class PortDirection { kInput, kOutput };

std::string_view PortDirectionName(PortDirection direction);

// Built-in port types that need no data dictionary declaration.
inline constexpr std::string_view kBuiltinIntegerType = "integer";
inline constexpr std::string_view kBuiltinBooleanType = "boolean";
bool IsBuiltinType(std::string_view type_name);

struct Port {
  std::string name;
  PortDirection direction = PortDirection::kInput;
  std::string type_name;

  friend bool operator==(const Port&, const Port&) = default;
};

struct PortRef {
  std::string component;
  std::string port;

  friend bool operator==(const PortRef&, const PortRef&) = default;
};

struct Channel {
  std::string name;
  PortRef source;
  PortRef target;

  friend bool operator==(const Channel&, const Channel&) = default;
};

struct Component {
  std::string name;
  std::vector<Port> ports;
  std::vector<Component> subcomponents;
  std::vector<Channel> channels;

  const Port* FindPort(std::string_view port_name) const;
  const Component* FindSubcomponent(std::string_view child_name) const;

  friend bool operator==(const Component&, const Component&) = default;
};

struct Transition {
  std::string source;
  std::string target;
  std::optional<std::string> guard;
  std::optional<std::string> action;

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct StateAutomaton {
  std::string name;
  std::string owner;  // name of the component the automaton belongs to
  std::vector<std::string> states;
  std::string initial_state;
  std::vector<Transition> transitions;

  friend bool operator==(const StateAutomaton&,
                         const StateAutomaton&) = default;
};

struct Model {
  std::string name;
  std::optional<DataDictionary> data_dictionary;
  std::optional<Component> architecture;  // the root component
  std::vector<StateAutomaton> automata;

  bool empty() const {
    return (!data_dictionary || data_dictionary->empty()) && !architecture &&
           automata.empty();
  }

  friend bool operator==(const Model&, const Model&) = default;
};

// Components of the architecture in depth-first pre-order.
std::vector<const Component*> ComponentsDepthFirst(const Model& model);

// Checks every type invariant of the model and throws the first violation
// as an acenls::Error. ParseModel runs this before returning; callers that
// build models in code can run it themselves.
void ValidateModel(const Model& model);

}  // namespace acenls

#endif  // ACENLS_MODEL_H_
