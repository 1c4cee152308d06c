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

#include "ecchash/batch.h"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>

#include "ecchash/error.h"
#include "homhash_internal.h"

namespace ecchash {
namespace {

// Records per lockstep batch. Larger batches amortise the inversion
// further but give the scheduler less to balance.
constexpr std::size_t kBatchChunk = 512;

}  // namespace

int parallel_threads() { return omp_get_max_threads(); }

std::vector<HashPoint> hash_batch_serial(std::span<const PlaintextRecord> records,
                                         const CurveRef& curve) {
  std::vector<HashPoint> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(hash_record(r, curve));
  return out;
}

std::vector<HashPoint> hash_batch_parallel(std::span<const PlaintextRecord> records,
                                           const CurveRef& curve) {
  // Reducing first raises the lowest-index degenerate record, as serially.
  std::vector<BigInt> ks;
  ks.reserve(records.size());
  for (const auto& r : records) ks.push_back(hash_exponent(r.value, *curve));

  const std::size_t threads = static_cast<std::size_t>(parallel_threads());
  const std::size_t chunk =
      std::clamp<std::size_t>((ks.size() + threads - 1) / std::max<std::size_t>(threads, 1), 1,
                              kBatchChunk);
  const auto nchunks = static_cast<std::int64_t>((ks.size() + chunk - 1) / chunk);
  const Point g = base_point(curve);
  std::vector<std::vector<Point>> parts(static_cast<std::size_t>(nchunks));
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < nchunks; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * chunk;
    const std::size_t len = std::min(chunk, ks.size() - lo);
    try {
      parts[c] = scalar_mul_batch(std::span<const BigInt>(ks).subspan(lo, len), g);
    } catch (...) {
#pragma omp critical(ecchash_batch_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::vector<HashPoint> out;
  out.reserve(ks.size());
  for (auto& part : parts) {
    for (auto& p : part) out.push_back(make_trusted_hash_point(std::move(p)));
  }
  return out;
}

HashPoint aggregate_serial(std::span<const HashPoint> hashes) { return aggregate(hashes); }

HashPoint aggregate_parallel(std::span<const HashPoint> hashes) {
  if (hashes.empty()) throw Error(ErrorCode::kEmptyAggregate, "nothing to aggregate");
  // Same first error as the serial fold, before any work is split.
  for (std::size_t i = 1; i < hashes.size(); ++i) require_same_curve(hashes.front(), hashes[i]);

  const std::size_t chunks =
      std::min<std::size_t>(hashes.size(), static_cast<std::size_t>(parallel_threads()));
  std::vector<std::optional<Point>> partial(chunks);
  const auto nchunks = static_cast<std::int64_t>(chunks);

#pragma omp parallel for schedule(static, 1)
  for (std::int64_t c = 0; c < nchunks; ++c) {
    const std::size_t lo = hashes.size() * static_cast<std::size_t>(c) / chunks;
    const std::size_t hi = hashes.size() * static_cast<std::size_t>(c + 1) / chunks;
    partial[c].emplace(fold(hashes.subspan(lo, hi - lo)));
  }

  Point sum = std::move(*partial.front());
  for (std::size_t c = 1; c < chunks; ++c) sum = point_add_unchecked(sum, *partial[c]);
  return finish_aggregate(std::move(sum));
}

}  // namespace ecchash
