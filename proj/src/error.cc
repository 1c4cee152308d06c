// Copyright 2026 The ecchash Authors
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

#include "ecchash/error.h"

namespace ecchash {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kInvalidModulus: return "invalid-modulus";
    case ErrorCode::kIncompatibleModuli: return "incompatible-moduli";
    case ErrorCode::kNonInvertible: return "non-invertible-element";
    case ErrorCode::kUnknownCurve: return "unknown-curve";
    case ErrorCode::kIncompatibleCurves: return "incompatible-curves";
    case ErrorCode::kInvalidPoint: return "invalid-point";
    case ErrorCode::kDegenerateRecord: return "degenerate-record";
    case ErrorCode::kEmptyAggregate: return "empty-aggregate";
    case ErrorCode::kDegenerateAggregate: return "degenerate-aggregate";
    case ErrorCode::kDecode: return "decode-error";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kDuplicateEntry: return "duplicate-entry";
    case ErrorCode::kStorage: return "storage-error";
    case ErrorCode::kIntegrity: return "integrity-error";
    case ErrorCode::kUsage: return "usage-error";
  }
  return "unknown-error";
}

}  // namespace ecchash
