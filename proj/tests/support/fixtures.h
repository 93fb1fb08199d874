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

#ifndef ACENLS_TESTS_SUPPORT_FIXTURES_H_
#define ACENLS_TESTS_SUPPORT_FIXTURES_H_

#include <fstream>
#include <sstream>
#include <string>

namespace acenls::testing {

inline std::string DataPath(const std::string& file) {
  return std::string(ACENLS_TEST_DATA_DIR) + "/" + file;
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline constexpr const char* kTrafficLight = "trafficlight.xml";
inline constexpr const char* kTrafficLightFull = "trafficlight-full.xml";

}  // namespace acenls::testing

#endif  // ACENLS_TESTS_SUPPORT_FIXTURES_H_
