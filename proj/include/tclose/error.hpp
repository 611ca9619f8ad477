//
// Copyright 2026 The tclose Authors
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
//

#ifndef TCLOSE_ERROR_HPP_
#define TCLOSE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tclose {

enum class ErrorCode {
  // Input / schema problems.
  kIo,
  kMissingColumn,
  kRaggedRow,
  kEmptyTable,
  kMissingValue,
  kInvalidSchema,
  kMalformedCsv,
  // Distribution construction.
  kNonNumericValue,
  kValueOutsideDomain,
  kInvalidDistribution,
  // Distance computation.
  kLengthMismatch,
  kIndexOutOfRange,
  kInstanceTooLarge,
  // Metrics.
  kNoClasses,
  kUnknownAttribute,
  kMethodRoleMismatch,
  // Should never surface; signals a broken internal invariant.
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tclose

#endif  // TCLOSE_ERROR_HPP_
