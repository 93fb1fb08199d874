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

#include "acenls/model-parser.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "model-validation.h"
#include "xml-tree.h"

namespace acenls {

using internal::LocationTable;
using internal::Path;
using internal::XmlElement;

std::string_view TypeTag(std::string_view xsi_type) {
  auto colon = xsi_type.rfind(':');
  if (colon == std::string_view::npos) return xsi_type;
  return xsi_type.substr(colon + 1);
}

namespace {

class ModelReader {
 public:
  explicit ModelReader(std::vector<ParseWarning>* warnings)
      : warnings_(warnings) {}

  Model Read(const XmlElement& root) {
    Model model;
    if (const std::string* name = root.Attribute("name")) model.name = *name;

    for (const XmlElement& section : root.children) {
      if (section.name == "rootElements") {
        const std::string& type = RequireType(section);
        std::string_view tag = TypeTag(type);
        if (tag == "DataDictionary") {
          if (!model.data_dictionary) model.data_dictionary.emplace();
          ReadDataDictionary(section, &*model.data_dictionary);
        } else if (tag == "ComponentArchitecture") {
          if (model.architecture) {
            throw Error(ErrorCode::kInvalidModel,
                        "model has more than one ComponentArchitecture section",
                        section.location);
          }
          ReadArchitecture(section, &model);
        } else {
          throw Error(ErrorCode::kUnknownSectionType,
                      "unknown rootElements type '" + type + "'",
                      section.location);
        }
      } else if (section.name == "containedElements") {
        // Outside a component the owner must be given explicitly.
        ReadAutomaton(section, RequireAttribute(section, "owner"), &model);
      } else {
        Warn(section, "ignoring element <" + section.name + ">");
      }
    }

    internal::ValidateModel(model, &locations_);
    return model;
  }

 private:
  void Warn(const XmlElement& e, std::string message) {
    if (warnings_ != nullptr) {
      warnings_->push_back({e.location, std::move(message)});
    }
  }

  static const std::string& RequireAttribute(const XmlElement& e,
                                             std::string_view key) {
    const std::string* value = e.Attribute(key);
    if (value == nullptr) {
      throw Error(ErrorCode::kMissingAttribute,
                  "<" + e.name + "> lacks attribute '" + std::string(key) + "'",
                  e.location);
    }
    return *value;
  }

  static const std::string& RequireType(const XmlElement& e) {
    return RequireAttribute(e, "xsi:type");
  }

  // Enforces the expected final xsi:type segment; anything else is a kind
  // this tool does not translate.
  static void ExpectTag(const XmlElement& e, std::string_view expected,
                        const char* what) {
    const std::string& type = RequireType(e);
    if (TypeTag(type) != expected) {
      throw Error(ErrorCode::kUnknownSectionType,
                  std::string("unsupported ") + what + " type '" + type +
                      "' (expected " + std::string(expected) + ")",
                  e.location);
    }
  }

  void ReadDataDictionary(const XmlElement& section, DataDictionary* dd) {
    for (const XmlElement& e : section.children) {
      if (e.name == "typeDefinitions") {
        ExpectTag(e, "Enumeration", "type definition");
        const std::string path = Path("", "enum", dd->enumerations.size());
        locations_.Set(path, e.location);
        EnumerationType type;
        type.name = RequireAttribute(e, "name");
        for (const XmlElement& m : e.children) {
          if (m.name != "members") {
            Warn(m, "ignoring element <" + m.name + "> in enumeration");
            continue;
          }
          locations_.Set(Path(path, "member", type.members.size()), m.location);
          type.members.push_back(RequireAttribute(m, "name"));
        }
        dd->enumerations.push_back(std::move(type));
      } else if (e.name == "functions") {
        locations_.Set(Path("", "const", dd->constants.size()), e.location);
        dd->constants.push_back(ReadConstant(e));
      } else {
        Warn(e, "ignoring element <" + e.name + "> in data dictionary");
      }
    }
  }

  ConstantFunction ReadConstant(const XmlElement& functions) {
    ConstantFunction constant;
    const XmlElement* function = nullptr;
    const XmlElement* definition = nullptr;
    const XmlElement* return_type = nullptr;
    for (const XmlElement& e : functions.children) {
      if (e.name == "function") {
        function = &e;
      } else if (e.name == "definition") {
        definition = &e;
      } else if (e.name == "returnType") {
        return_type = &e;
      } else {
        Warn(e, "ignoring element <" + e.name + "> in function");
      }
    }
    if (function == nullptr) {
      throw Error(ErrorCode::kMissingAttribute,
                  "<functions> has no <function> carrying a name",
                  functions.location);
    }
    constant.name = RequireAttribute(*function, "name");
    if (definition == nullptr) {
      for (const XmlElement& e : function->children) {
        if (e.name == "definition") definition = &e;
      }
    }

    const XmlElement* value = nullptr;
    if (definition != nullptr) {
      for (const XmlElement& statement : definition->children) {
        if (statement.name != "statements") continue;
        ExpectTag(statement, "Return", "statement");
        for (const XmlElement& v : statement.children) {
          if (v.name == "value") value = &v;
        }
      }
    }
    if (value == nullptr) {
      throw Error(ErrorCode::kMissingAttribute,
                  "constant '" + constant.name + "' lacks a value",
                  function->location);
    }
    ExpectTag(*value, "IntConst", "constant value");
    const std::string& text = RequireAttribute(*value, "value");
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, constant.value);
    if (ec != std::errc() || ptr != end || text.empty()) {
      throw Error(ErrorCode::kInvalidModel,
                  "constant '" + constant.name + "' has non-integer value '" +
                      text + "'",
                  value->location);
    }
    if (return_type != nullptr) ExpectTag(*return_type, "TInt", "return");
    return constant;
  }

  void ReadArchitecture(const XmlElement& section, Model* model) {
    for (const XmlElement& e : section.children) {
      if (e.name != "components") {
        Warn(e, "ignoring element <" + e.name + "> in architecture");
        continue;
      }
      if (model->architecture) {
        throw Error(ErrorCode::kInvalidModel,
                    "architecture must have a single root component",
                    e.location);
      }
      model->architecture = Component{};
      ReadComponent(e, "comp/0", &*model->architecture, model);
    }
    if (!model->architecture) {
      Warn(section, "architecture section has no components");
    }
  }

  void ReadComponent(const XmlElement& e, const std::string& path,
                     Component* component, Model* model) {
    locations_.Set(path, e.location);
    component->name = RequireAttribute(e, "name");
    for (const XmlElement& child : e.children) {
      if (child.name == "ports") {
        Port port;
        const std::string& type = RequireType(child);
        std::string_view tag = TypeTag(type);
        if (tag == "InputPort") {
          port.direction = PortDirection::kInput;
        } else if (tag == "OutputPort") {
          port.direction = PortDirection::kOutput;
        } else {
          throw Error(ErrorCode::kUnknownSectionType,
                      "unsupported port type '" + type + "'", child.location);
        }
        port.name = RequireAttribute(child, "name");
        port.type_name = RequireAttribute(child, "type");
        locations_.Set(Path(path, "port", component->ports.size()),
                       child.location);
        component->ports.push_back(std::move(port));
      } else if (child.name == "components") {
        std::string child_path =
            path + "/" + std::to_string(component->subcomponents.size());
        component->subcomponents.emplace_back();
        ReadComponent(child, child_path, &component->subcomponents.back(),
                      model);
      } else if (child.name == "channels") {
        Channel channel;
        channel.name = RequireAttribute(child, "name");
        channel.source = {RequireAttribute(child, "sourceComponent"),
                          RequireAttribute(child, "sourcePort")};
        channel.target = {RequireAttribute(child, "targetComponent"),
                          RequireAttribute(child, "targetPort")};
        locations_.Set(Path(path, "channel", component->channels.size()),
                       child.location);
        component->channels.push_back(std::move(channel));
      } else if (child.name == "containedElements") {
        ReadAutomaton(child, component->name, model);
      } else {
        Warn(child, "ignoring element <" + child.name + "> in component");
      }
    }
  }

  void ReadAutomaton(const XmlElement& e, const std::string& owner,
                     Model* model) {
    const std::string& type = RequireType(e);
    if (TypeTag(type) != "StateAutomaton") {
      throw Error(ErrorCode::kUnknownSectionType,
                  "unknown containedElements type '" + type + "'",
                  e.location);
    }
    const std::string path = Path("", "auto", model->automata.size());
    locations_.Set(path, e.location);
    StateAutomaton automaton;
    automaton.name = RequireAttribute(e, "name");
    automaton.owner = owner;
    automaton.initial_state = RequireAttribute(e, "initialState");
    for (const XmlElement& child : e.children) {
      if (child.name == "states") {
        locations_.Set(Path(path, "state", automaton.states.size()),
                       child.location);
        automaton.states.push_back(RequireAttribute(child, "name"));
      } else if (child.name == "transitions") {
        Transition t;
        t.source = RequireAttribute(child, "source");
        t.target = RequireAttribute(child, "target");
        if (const std::string* g = child.Attribute("guard")) t.guard = *g;
        if (const std::string* a = child.Attribute("action")) t.action = *a;
        locations_.Set(Path(path, "transition", automaton.transitions.size()),
                       child.location);
        automaton.transitions.push_back(std::move(t));
      } else {
        Warn(child, "ignoring element <" + child.name + "> in automaton");
      }
    }
    model->automata.push_back(std::move(automaton));
  }

  std::vector<ParseWarning>* warnings_;
  LocationTable locations_;
};

}  // namespace

Model ParseModel(std::string_view xml_text,
                 std::vector<ParseWarning>* warnings) {
  XmlElement root = internal::ParseXmlTree(xml_text);
  return ModelReader(warnings).Read(root);
}

Model ParseModelFile(const std::string& path,
                     std::vector<ParseWarning>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, path + ": no such file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseModel(buffer.str(), warnings);
}

}  // namespace acenls
