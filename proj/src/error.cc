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

#include "acenls/error.h"

#include <utility>

namespace acenls {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedXml: return "MalformedXml";
    case ErrorCode::kUnknownSectionType: return "UnknownSectionType";
    case ErrorCode::kMissingAttribute: return "MissingAttribute";
    case ErrorCode::kDuplicateName: return "DuplicateName";
    case ErrorCode::kEmptyEnumeration: return "EmptyEnumeration";
    case ErrorCode::kInvalidName: return "InvalidName";
    case ErrorCode::kInvalidModel: return "InvalidModel";
    case ErrorCode::kBlankSpaceInContentWord: return "BlankSpaceInContentWord";
    case ErrorCode::kFunctionWordCollision: return "FunctionWordCollision";
    case ErrorCode::kCategoryConflict: return "CategoryConflict";
    case ErrorCode::kLexiconFormat: return "LexiconFormat";
    case ErrorCode::kUnknownToken: return "UnknownToken";
    case ErrorCode::kInvalidSentence: return "InvalidSentence";
    case ErrorCode::kAmbiguousSentence: return "AmbiguousSentence";
    case ErrorCode::kUnresolvedPronoun: return "UnresolvedPronoun";
    case ErrorCode::kUnresolvedReference: return "UnresolvedReference";
    case ErrorCode::kIdentifierCollision: return "IdentifierCollision";
    case ErrorCode::kGuardNotLexicalizable: return "GuardNotLexicalizable";
    case ErrorCode::kValidationInternalError: return "ValidationInternalError";
    case ErrorCode::kUnsupportedQuestionForm: return "UnsupportedQuestionForm";
    case ErrorCode::kUnknownEntity: return "UnknownEntity";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message,
             std::optional<SourceLocation> location)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      message_(std::move(message)),
      location_(location) {}

}  // namespace acenls
