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

#ifndef ECCHASH_SRC_LIMBS_H_
#define ECCHASH_SRC_LIMBS_H_

// Magnitude kernels shared by BigInt and the modular inverse. Inputs are
// little-endian limb spans without leading zero limbs unless noted.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ecchash/limb_buffer.h"

namespace ecchash::detail {

using Limb = std::uint64_t;
using Wide = unsigned __int128;
using ecchash::LimbBuffer;

void trim(LimbBuffer& limbs) noexcept;
int compare_mag(std::span<const Limb> a, std::span<const Limb> b) noexcept;

LimbBuffer add_mag(std::span<const Limb> a, std::span<const Limb> b);
// Requires a >= b.
LimbBuffer sub_mag(std::span<const Limb> a, std::span<const Limb> b);
// out[0, a.size() + b.size()) = a * b; out must not alias the inputs.
void mul_into(std::span<const Limb> a, std::span<const Limb> b, Limb* out) noexcept;
LimbBuffer mul_mag(std::span<const Limb> a, std::span<const Limb> b);
// Knuth algorithm D. Requires b non-empty. Either output may be null.
void divmod_mag(std::span<const Limb> a, std::span<const Limb> b,
                LimbBuffer* quotient, LimbBuffer* remainder);

}  // namespace ecchash::detail

#endif  // ECCHASH_SRC_LIMBS_H_
