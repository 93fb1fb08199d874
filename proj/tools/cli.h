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

// The acenls command line, callable in-process so tests can drive it.
//
//   acenls generate MODEL.xml [-o OUT] [--sections datatypes,architecture,automata]
//   acenls validate DOC.ace
//   acenls query MODEL.xml ["QUESTION?"]      (no question: one per stdin line)
//   acenls facts MODEL.xml
//
// Common flags: --lexicon FILE (default $ACENLS_LEXICON), --strict.
// Exit status: 0 success, 1 input or model error, 2 generation or
// validation error, 3 query error.

#ifndef ACENLS_TOOLS_CLI_H_
#define ACENLS_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace acenls::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitGeneration = 2;
inline constexpr int kExitQuery = 3;

inline constexpr const char* kLexiconEnv = "ACENLS_LEXICON";

// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace acenls::cli

#endif  // ACENLS_TOOLS_CLI_H_
