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

#ifndef ECCHASH_BATCH_H_
#define ECCHASH_BATCH_H_

#include <span>
#include <vector>

#include "ecchash/homhash.h"

namespace ecchash {

// Batch kernels. The serial versions are the reference; the parallel ones
// use OpenMP and return identical results. Errors match what the serial
// version would raise first (lowest failing index).
//
// hash_batch_parallel splits the records into chunks and hashes each chunk
// with scalar_mul_batch, so it is also the faster kernel on one thread.

std::vector<HashPoint> hash_batch_serial(std::span<const PlaintextRecord> records,
                                         const CurveRef& curve);
std::vector<HashPoint> hash_batch_parallel(std::span<const PlaintextRecord> records,
                                           const CurveRef& curve);

// Serial is aggregate(). The parallel version folds contiguous chunks per
// thread and then folds the partial sums, which is equal by associativity.
HashPoint aggregate_serial(std::span<const HashPoint> hashes);
HashPoint aggregate_parallel(std::span<const HashPoint> hashes);

// Threads the parallel kernels will use (1 without OpenMP).
int parallel_threads();

}  // namespace ecchash

#endif  // ECCHASH_BATCH_H_
