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

#ifndef ECCHASH_SELFTEST_H_
#define ECCHASH_SELFTEST_H_

#include <string>
#include <vector>

namespace ecchash {

struct SelfTestCheck {
  std::string name;
  bool passed;
  std::string detail;
};

// Deliberate damage for exercising the failure paths.
struct SelfTestFaults {
  // Runs the P-224 checks against a copy of the curve whose Gy is off by one.
  bool corrupt_p224_gy = false;
};

// Registry sanity for every curve, G + 2G == 2G + G == 3G, and the embedded
// three-record P-224 vectors. Deterministic; throws nothing.
std::vector<SelfTestCheck> run_selftest(const SelfTestFaults& faults = {});

}  // namespace ecchash

#endif  // ECCHASH_SELFTEST_H_
