// Copyright 2026 The stackgpa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STACKGPA_ERRORS_H_
#define STACKGPA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace stackgpa {

enum class ErrorCode {
  kParse,
  kEntryOutOfRange,
  kShapeMismatch,
  kEmptyTranscript,
  kInvalidArgument,
  kHorizonTooShort,
  kMissingEntry,
  kStateSpaceExceeded,
  kRandomnessContractViolation,
  kGraphTooSmall,
  kBudgetExceeded,
  kInvalidCover,
  kDimensionMismatch,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this one exception type; the
// code distinguishes input errors from budget exhaustion for the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kEntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kEmptyTranscript: return "EmptyTranscript";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kHorizonTooShort: return "HorizonTooShort";
    case ErrorCode::kMissingEntry: return "MissingEntry";
    case ErrorCode::kStateSpaceExceeded: return "StateSpaceExceeded";
    case ErrorCode::kRandomnessContractViolation:
      return "RandomnessContractViolation";
    case ErrorCode::kGraphTooSmall: return "GraphTooSmall";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvalidCover: return "InvalidCover";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
  }
  return "Error";
}

}  // namespace stackgpa

#endif  // STACKGPA_ERRORS_H_
