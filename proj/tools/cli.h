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

#ifndef ECCHASH_TOOLS_CLI_H_
#define ECCHASH_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "ecchash/error.h"

namespace ecchash::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsageError = 2,
  kParseError = 3,
  kDegenerateInput = 4,
  kStorageError = 5,
  kIntegrityError = 6,
  kSelfTestFailed = 7,
};

ExitCode exit_code_for(ErrorCode code);

// Runs `ecchash <args...>` (args excludes the program name) with the given
// streams standing in for stdin, stdout and stderr.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace ecchash::cli

#endif  // ECCHASH_TOOLS_CLI_H_
