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

// Minimal element tree on top of expat. Character data is dropped; the
// model files carry everything in attributes.

#ifndef ACENLS_SRC_XML_TREE_H_
#define ACENLS_SRC_XML_TREE_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acenls/error.h"

namespace acenls {
namespace internal {

struct XmlElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlElement> children;
  SourceLocation location;

  const std::string* Attribute(std::string_view key) const;
};

// Throws Error(kMalformedXml) with the expat position on failure.
XmlElement ParseXmlTree(std::string_view text);

}  // namespace internal
}  // namespace acenls

#endif  // ACENLS_SRC_XML_TREE_H_
