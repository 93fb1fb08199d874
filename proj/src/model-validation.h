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

#ifndef ACENLS_SRC_MODEL_VALIDATION_H_
#define ACENLS_SRC_MODEL_VALIDATION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "acenls/error.h"
#include "acenls/model.h"

namespace acenls {
namespace internal {

// Source positions of model elements, addressed by structural path so the
// validator can report where a violation came from. Paths:
//   enum/<i>, enum/<i>/member/<j>, const/<i>,
//   comp/<i>/<j>/..., <comp path>/port/<j>, <comp path>/channel/<j>,
//   auto/<i>, auto/<i>/state/<j>, auto/<i>/transition/<j>
class LocationTable {
 public:
  void Set(std::string path, SourceLocation location) {
    table_[std::move(path)] = location;
  }
  std::optional<SourceLocation> Get(const std::string& path) const {
    auto it = table_.find(path);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<std::string, SourceLocation> table_;
};

inline std::string Path(const std::string& prefix, const char* kind,
                        std::size_t index) {
  return prefix + (prefix.empty() ? "" : "/") + kind + "/" +
         std::to_string(index);
}

void ValidateModel(const Model& model, const LocationTable* locations);

}  // namespace internal
}  // namespace acenls

#endif  // ACENLS_SRC_MODEL_VALIDATION_H_
