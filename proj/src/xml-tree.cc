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

#include "xml-tree.h"

#include <expat.h>

#include <memory>

namespace acenls {
namespace internal {

const std::string* XmlElement::Attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

namespace {

struct BuildState {
  XML_Parser parser = nullptr;
  XmlElement root;
  bool has_root = false;
  // Path of open elements; pointers stay valid because a parent's children
  // vector is only appended to while that child is closed.
  std::vector<XmlElement*> open;
};

void OnStart(void* user_data, const XML_Char* name, const XML_Char** atts) {
  auto* state = static_cast<BuildState*>(user_data);
  XmlElement element;
  element.name = name;
  for (int i = 0; atts[i] != nullptr; i += 2) {
    element.attributes.emplace_back(atts[i], atts[i + 1]);
  }
  element.location.line = XML_GetCurrentLineNumber(state->parser);
  element.location.column = XML_GetCurrentColumnNumber(state->parser) + 1;

  if (state->open.empty()) {
    state->root = std::move(element);
    state->has_root = true;
    state->open.push_back(&state->root);
  } else {
    XmlElement* parent = state->open.back();
    parent->children.push_back(std::move(element));
    state->open.push_back(&parent->children.back());
  }
}

void OnEnd(void* user_data, const XML_Char*) {
  static_cast<BuildState*>(user_data)->open.pop_back();
}

struct ParserDeleter {
  void operator()(XML_ParserStruct* p) const { XML_ParserFree(p); }
};

}  // namespace

XmlElement ParseXmlTree(std::string_view text) {
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(
      XML_ParserCreate("UTF-8"));
  if (!parser) throw Error(ErrorCode::kMalformedXml, "cannot create parser");

  BuildState state;
  state.parser = parser.get();
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), OnStart, OnEnd);

  if (XML_Parse(parser.get(), text.data(), static_cast<int>(text.size()),
                XML_TRUE) == XML_STATUS_ERROR) {
    SourceLocation where{XML_GetCurrentLineNumber(parser.get()),
                         XML_GetCurrentColumnNumber(parser.get()) + 1};
    throw Error(ErrorCode::kMalformedXml,
                XML_ErrorString(XML_GetErrorCode(parser.get())), where);
  }
  if (!state.has_root) {
    throw Error(ErrorCode::kMalformedXml, "document has no root element");
  }
  return std::move(state.root);
}

}  // namespace internal
}  // namespace acenls
