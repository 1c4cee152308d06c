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

#ifndef ECCHASH_SRC_HOMHASH_INTERNAL_H_
#define ECCHASH_SRC_HOMHASH_INTERNAL_H_

#include <span>

#include "ecchash/homhash.h"

namespace ecchash {

// Skips validation; only for points known to be on-curve and non-identity.
HashPoint make_trusted_hash_point(Point point);

// value mod order; Error(kDegenerateRecord) when that is zero.
BigInt hash_exponent(const BigInt& value, const CurveParams& curve);
HashPoint hash_scalar(const BigInt& value, const CurveRef& curve);
void require_same_curve(const HashPoint& a, const HashPoint& b);
// Sum of a non-empty run, possibly the identity.
Point fold(std::span<const HashPoint> hashes);
HashPoint finish_aggregate(Point sum);

}  // namespace ecchash

#endif  // ECCHASH_SRC_HOMHASH_INTERNAL_H_
