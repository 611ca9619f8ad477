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

#include "tclose/error.hpp"

namespace tclose {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kRaggedRow: return "RaggedRow";
    case ErrorCode::kEmptyTable: return "EmptyTable";
    case ErrorCode::kMissingValue: return "MissingValue";
    case ErrorCode::kInvalidSchema: return "InvalidSchema";
    case ErrorCode::kMalformedCsv: return "MalformedCsv";
    case ErrorCode::kNonNumericValue: return "NonNumericValue";
    case ErrorCode::kValueOutsideDomain: return "ValueOutsideDomain";
    case ErrorCode::kInvalidDistribution: return "InvalidDistribution";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kNoClasses: return "NoClasses";
    case ErrorCode::kUnknownAttribute: return "UnknownAttribute";
    case ErrorCode::kMethodRoleMismatch: return "MethodRoleMismatch";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace tclose
