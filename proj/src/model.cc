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

#include "acenls/model.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "model-validation.h"

namespace acenls {

std::string_view PortDirectionName(PortDirection direction) {
  return direction == PortDirection::kInput ? "input" : "output";
}

bool IsBuiltinType(std::string_view type_name) {
  return type_name == kBuiltinIntegerType || type_name == kBuiltinBooleanType;
}

const Port* Component::FindPort(std::string_view port_name) const {
  for (const Port& p : ports) {
    if (p.name == port_name) return &p;
  }
  return nullptr;
}

const Component* Component::FindSubcomponent(
    std::string_view child_name) const {
  for (const Component& c : subcomponents) {
    if (c.name == child_name) return &c;
  }
  return nullptr;
}

namespace {

void CollectDepthFirst(const Component& c,
                       std::vector<const Component*>* out) {
  out->push_back(&c);
  for (const Component& child : c.subcomponents) CollectDepthFirst(child, out);
}

}  // namespace

std::vector<const Component*> ComponentsDepthFirst(const Model& model) {
  std::vector<const Component*> out;
  if (model.architecture) CollectDepthFirst(*model.architecture, &out);
  return out;
}

void ValidateModel(const Model& model) {
  internal::ValidateModel(model, nullptr);
}

namespace internal {
namespace {

std::string Where(const std::optional<SourceLocation>& loc) {
  if (!loc) return "";
  return "line " + std::to_string(loc->line);
}

class Validator {
 public:
  explicit Validator(const LocationTable* locations) : locations_(locations) {}

  std::optional<SourceLocation> At(const std::string& path) const {
    if (locations_ == nullptr) return std::nullopt;
    return locations_->Get(path);
  }

  [[noreturn]] void Fail(ErrorCode code, const std::string& message,
                         const std::string& path) const {
    throw Error(code, message, At(path));
  }

  void CheckName(const std::string& name, const char* what,
                 const std::string& path) const {
    if (name.empty()) Fail(ErrorCode::kInvalidName, std::string(what) +
                                                        " has an empty name",
                           path);
    auto blank = std::find_if(name.begin(), name.end(), [](unsigned char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
             c == '\f';
    });
    if (blank != name.end()) {
      Fail(ErrorCode::kInvalidName,
           std::string(what) + " name '" + name +
               "' contains a blank space; write it hyphenated",
           path);
    }
  }

  // Records name -> path in `seen`, failing with both locations on reuse.
  void Unique(std::map<std::string, std::string>* seen, const std::string& name,
              const char* what, const std::string& path) const {
    auto [it, inserted] = seen->emplace(name, path);
    if (inserted) return;
    std::string message = "duplicate " + std::string(what) + " name '" + name +
                          "'";
    std::string first = Where(At(it->second));
    std::string second = Where(At(path));
    if (!first.empty() && !second.empty()) {
      message += " at " + second + " (first defined at " + first + ")";
    }
    Fail(ErrorCode::kDuplicateName, message, path);
  }

 private:
  const LocationTable* locations_;
};

void ValidateDataDictionary(const Validator& v, const DataDictionary& dd,
                            std::map<std::string, std::string>* type_names) {
  std::map<std::string, std::string> constants;
  for (std::size_t i = 0; i < dd.enumerations.size(); ++i) {
    const EnumerationType& e = dd.enumerations[i];
    const std::string path = Path("", "enum", i);
    v.CheckName(e.name, "enumeration", path);
    if (e.members.empty()) {
      v.Fail(ErrorCode::kEmptyEnumeration,
             "enumeration '" + e.name + "' has no members", path);
    }
    std::map<std::string, std::string> members;
    for (std::size_t j = 0; j < e.members.size(); ++j) {
      const std::string mpath = Path(path, "member", j);
      v.CheckName(e.members[j], "member", mpath);
      v.Unique(&members, e.members[j], "member", mpath);
    }
    v.Unique(type_names, e.name, "enumeration", path);
  }
  for (std::size_t i = 0; i < dd.constants.size(); ++i) {
    const ConstantFunction& c = dd.constants[i];
    const std::string path = Path("", "const", i);
    v.CheckName(c.name, "constant", path);
    v.Unique(&constants, c.name, "constant", path);
  }
  // Enumerations and constants share one namespace.
  for (std::size_t i = 0; i < dd.constants.size(); ++i) {
    auto it = type_names->find(dd.constants[i].name);
    if (it != type_names->end()) {
      std::map<std::string, std::string> both{*it};
      v.Unique(&both, dd.constants[i].name, "data dictionary",
               Path("", "const", i));
    }
  }
}

struct ArchitectureNames {
  std::map<std::string, std::string> components;
  std::map<std::string, std::string> channels;
};

void ValidateComponentNames(const Validator& v, const Component& c,
                            const std::string& path,
                            const std::map<std::string, std::string>& types,
                            ArchitectureNames* names) {
  v.CheckName(c.name, "component", path);
  v.Unique(&names->components, c.name, "component", path);
  std::map<std::string, std::string> ports;
  for (std::size_t j = 0; j < c.ports.size(); ++j) {
    const Port& p = c.ports[j];
    const std::string ppath = Path(path, "port", j);
    v.CheckName(p.name, "port", ppath);
    v.Unique(&ports, p.name, "port", ppath);
    v.CheckName(p.type_name, "port type", ppath);
    if (!IsBuiltinType(p.type_name) && !types.contains(p.type_name)) {
      v.Fail(ErrorCode::kInvalidModel,
             "port '" + p.name + "' of component '" + c.name +
                 "' has undeclared type '" + p.type_name + "'",
             ppath);
    }
  }
  for (std::size_t j = 0; j < c.subcomponents.size(); ++j) {
    ValidateComponentNames(v, c.subcomponents[j],
                           path + "/" + std::to_string(j), types, names);
  }
  for (std::size_t j = 0; j < c.channels.size(); ++j) {
    const std::string cpath = Path(path, "channel", j);
    v.CheckName(c.channels[j].name, "channel", cpath);
    v.Unique(&names->channels, c.channels[j].name, "channel", cpath);
  }
}

// A channel declared in `owner` connects ports of `owner` or of its direct
// subcomponents. Data flows from an output of a child or an input of the
// owner, to an input of a child or an output of the owner.
void ValidateChannels(const Validator& v, const Component& owner,
                      const std::string& path) {
  for (std::size_t j = 0; j < owner.channels.size(); ++j) {
    const Channel& ch = owner.channels[j];
    const std::string cpath = Path(path, "channel", j);
    auto endpoint = [&](const PortRef& ref, bool is_source) {
      const char* side = is_source ? "source" : "target";
      const Component* holder = nullptr;
      bool holder_is_owner = false;
      if (ref.component == owner.name) {
        holder = &owner;
        holder_is_owner = true;
      } else {
        holder = owner.FindSubcomponent(ref.component);
      }
      if (holder == nullptr) {
        v.Fail(ErrorCode::kInvalidModel,
               "channel '" + ch.name + "' " + side +
                   " references unknown component '" + ref.component + "'",
               cpath);
      }
      const Port* port = holder->FindPort(ref.port);
      if (port == nullptr) {
        v.Fail(ErrorCode::kInvalidModel,
               "channel '" + ch.name + "' " + side + " references unknown port '" +
                   ref.port + "' of component '" + ref.component + "'",
               cpath);
      }
      PortDirection wanted;
      if (is_source) {
        wanted = holder_is_owner ? PortDirection::kInput : PortDirection::kOutput;
      } else {
        wanted = holder_is_owner ? PortDirection::kOutput : PortDirection::kInput;
      }
      if (port->direction != wanted) {
        v.Fail(ErrorCode::kInvalidModel,
               "channel '" + ch.name + "' " + side + " port '" + ref.port +
                   "' of '" + ref.component + "' must be an " +
                   std::string(PortDirectionName(wanted)) + " port",
               cpath);
      }
    };
    endpoint(ch.source, true);
    endpoint(ch.target, false);
  }
  for (std::size_t j = 0; j < owner.subcomponents.size(); ++j) {
    ValidateChannels(v, owner.subcomponents[j], path + "/" + std::to_string(j));
  }
}

void ValidateAutomata(const Validator& v, const Model& model,
                      const ArchitectureNames& arch) {
  std::map<std::string, std::string> names;
  for (std::size_t i = 0; i < model.automata.size(); ++i) {
    const StateAutomaton& a = model.automata[i];
    const std::string path = Path("", "auto", i);
    v.CheckName(a.name, "automaton", path);
    v.Unique(&names, a.name, "automaton", path);
    if (!arch.components.contains(a.owner)) {
      v.Fail(ErrorCode::kInvalidModel,
             "automaton '" + a.name + "' belongs to unknown component '" +
                 a.owner + "'",
             path);
    }
    if (a.states.empty()) {
      v.Fail(ErrorCode::kInvalidModel,
             "automaton '" + a.name + "' has no states", path);
    }
    std::map<std::string, std::string> states;
    for (std::size_t j = 0; j < a.states.size(); ++j) {
      const std::string spath = Path(path, "state", j);
      v.CheckName(a.states[j], "state", spath);
      v.Unique(&states, a.states[j], "state", spath);
    }
    if (!states.contains(a.initial_state)) {
      v.Fail(ErrorCode::kInvalidModel,
             "initial state '" + a.initial_state + "' of automaton '" + a.name +
                 "' is not one of its states",
             path);
    }
    for (std::size_t j = 0; j < a.transitions.size(); ++j) {
      const Transition& t = a.transitions[j];
      const std::string tpath = Path(path, "transition", j);
      for (const std::string* end : {&t.source, &t.target}) {
        if (!states.contains(*end)) {
          v.Fail(ErrorCode::kInvalidModel,
                 "transition endpoint '" + *end + "' is not a state of '" +
                     a.name + "'",
                 tpath);
        }
      }
    }
  }
}

}  // namespace

void ValidateModel(const Model& model, const LocationTable* locations) {
  Validator v(locations);
  std::map<std::string, std::string> types;
  if (model.data_dictionary) {
    ValidateDataDictionary(v, *model.data_dictionary, &types);
  }
  ArchitectureNames arch;
  if (model.architecture) {
    ValidateComponentNames(v, *model.architecture, "comp/0", types, &arch);
    ValidateChannels(v, *model.architecture, "comp/0");
  }
  ValidateAutomata(v, model, arch);
}

}  // namespace internal
}  // namespace acenls
