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

#ifndef ACENLS_ERROR_H_
#define ACENLS_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace acenls {

enum class ErrorCode {
  // Model ingestion.
  kMalformedXml,
  kUnknownSectionType,
  kMissingAttribute,
  kDuplicateName,
  kEmptyEnumeration,
  kInvalidName,
  kInvalidModel,

  // Lexicon.
  kBlankSpaceInContentWord,
  kFunctionWordCollision,
  kCategoryConflict,
  kLexiconFormat,

  // Tokenizing and parsing ACE text.
  kUnknownToken,
  kInvalidSentence,
  kAmbiguousSentence,
  kUnresolvedPronoun,
  kUnresolvedReference,

  // Generation.
  kIdentifierCollision,
  kGuardNotLexicalizable,
  kValidationInternalError,

  // Queries.
  kUnsupportedQuestionForm,
  kUnknownEntity,

  kIo,
};

// Stable diagnostic name, e.g. "MalformedXml".
std::string_view ErrorCodeName(ErrorCode code);

// Line/column in an input file (1-based), or a character offset inside a
// sentence when only that is known.
struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message,
        std::optional<SourceLocation> location = std::nullopt);

  ErrorCode code() const { return code_; }
  const std::optional<SourceLocation>& location() const { return location_; }
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<SourceLocation> location_;
};

}  // namespace acenls

#endif  // ACENLS_ERROR_H_
