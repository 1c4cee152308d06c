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

#ifndef ECCHASH_BENCH_H_
#define ECCHASH_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ecchash/curve.h"
#include "ecchash/homhash.h"

namespace ecchash {

struct BenchOptions {
  std::size_t n = 10000;
  // Empty means all registered curves.
  std::vector<CurveRef> curves;
  std::uint64_t seed = 1;
  // Hash and aggregate with the OpenMP kernels. Per-item statistics are
  // then replaced by wall-clock throughput (total / n).
  bool parallel = false;
};

struct BenchReport {
  std::string curve_name;
  int security_strength = 0;
  std::size_t n_records = 0;
  double hash_gen_mean_ms = 0;
  double aggregate_total_ms = 0;
  // aggregate_total_ms / (n_records - 1): n points take n - 1 additions.
  double aggregate_per_item_ms = 0;
  bool parallel = false;
  // encode_point() of the aggregate, for comparing runs.
  std::string aggregate_hex;
};

// n scalars uniform in [1, order), fixed by (seed, curve strength).
std::vector<PlaintextRecord> bench_records(const CurveParams& curve, std::size_t n,
                                           std::uint64_t seed);

// One curve: untimed warm-up, then timed hashing and aggregation. Throws
// Error(kUsage) when n < 2.
BenchReport run_bench_curve(const CurveRef& curve, const BenchOptions& options);

// All requested curves in order; `on_report` sees each row as it finishes.
std::vector<BenchReport> run_bench(const BenchOptions& options,
                                   const std::function<void(const BenchReport&)>& on_report = {});

// Mean hash time and aggregate total measured on other hardware, by
// security strength, printed next to our rows for scale.
struct ReferenceTiming {
  int security_strength;
  double hash_gen_mean_ms;
  double aggregate_total_ms;
};
std::optional<ReferenceTiming> reference_timing(int security_strength);

enum class BenchFormat { kCsv, kMarkdown };

// Streaming writer: header() once, row() per report, footer() at the end.
// Lines starting with '#' in CSV are comments.
class BenchWriter {
 public:
  BenchWriter(std::ostream& out, BenchFormat format, const BenchOptions& options);
  void header();
  void row(const BenchReport& report);
  void footer();

 private:
  std::ostream& out_;
  BenchFormat format_;
  BenchOptions options_;
  std::vector<BenchReport> seen_;
};

}  // namespace ecchash

#endif  // ECCHASH_BENCH_H_
