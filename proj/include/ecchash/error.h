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

#ifndef ECCHASH_ERROR_H_
#define ECCHASH_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecchash {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidModulus,
  kIncompatibleModuli,
  kNonInvertible,
  kUnknownCurve,
  kIncompatibleCurves,
  kInvalidPoint,
  kDegenerateRecord,
  kEmptyAggregate,
  kDegenerateAggregate,
  kDecode,
  kParse,
  kDuplicateEntry,
  kStorage,
  kIntegrity,
  kUsage,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ecchash

#endif  // ECCHASH_ERROR_H_
