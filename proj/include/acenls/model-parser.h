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

#ifndef ACENLS_MODEL_PARSER_H_
#define ACENLS_MODEL_PARSER_H_

#include <string>
#include <string_view>
#include <vector>

#include "acenls/error.h"
#include "acenls/model.h"

namespace acenls {

// Something in the input that was skipped (an element this tool does not
// translate). Not fatal unless the caller runs in strict mode.
struct ParseWarning {
  SourceLocation location;
  std::string message;
};

// Parses an AutoFocus3-style XML model. The result satisfies every Model
// invariant; otherwise the first violation is thrown as acenls::Error.
// Internal `id` attributes are ignored.
Model ParseModel(std::string_view xml_text,
                 std::vector<ParseWarning>* warnings = nullptr);

// Reads and parses a model file. Throws Error(kIo) if it cannot be read.
Model ParseModelFile(const std::string& path,
                     std::vector<ParseWarning>* warnings = nullptr);

// Last segment of a namespace-qualified xsi:type, e.g.
// "org-fortiss-af3-expression-definitions:Enumeration" -> "Enumeration".
std::string_view TypeTag(std::string_view xsi_type);

}  // namespace acenls

#endif  // ACENLS_MODEL_PARSER_H_
