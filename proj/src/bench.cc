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

#include "ecchash/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include "ecchash/batch.h"
#include "ecchash/error.h"

namespace ecchash {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr ReferenceTiming kReference[] = {
    {80, 5.67269117, 65.5990},  {112, 5.71806574, 64.7346}, {128, 5.71746361, 72.0647},
    {192, 5.84428082, 85.2743}, {256, 5.87799408, 73.4115},
};

// Uniform in [0, bound) by rejection on bit_length(bound) random bits.
BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
  const std::size_t bits = bound.bit_length();
  std::vector<std::uint64_t> limbs((bits + 63) / 64);
  const unsigned top = bits % 64;
  for (;;) {
    for (auto& l : limbs) l = rng();
    if (top != 0) limbs.back() &= (std::uint64_t{1} << top) - 1;
    BigInt v = BigInt::from_limbs(limbs);
    if (v < bound) return v;
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void warm_up(const CurveRef& curve, std::span<const PlaintextRecord> records, bool parallel) {
  const auto few = records.subspan(0, std::min<std::size_t>(records.size(), 16));
  if (parallel) {
    aggregate_parallel(hash_batch_parallel(few, curve));
  } else {
    aggregate(hash_batch_serial(few, curve));
  }
}

}  // namespace

std::vector<PlaintextRecord> bench_records(const CurveParams& curve, std::size_t n,
                                           std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(curve.security_strength)};
  std::mt19937_64 rng(seq);
  const BigInt span = curve.order - BigInt(1);
  std::vector<PlaintextRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back({uniform_below(rng, span) + BigInt(1)});
  return out;
}

BenchReport run_bench_curve(const CurveRef& curve, const BenchOptions& options) {
  if (options.n < 2) {
    throw Error(ErrorCode::kUsage, "bench needs n >= 2, got " + std::to_string(options.n));
  }
  const std::vector<PlaintextRecord> records = bench_records(*curve, options.n, options.seed);
  warm_up(curve, records, options.parallel);

  BenchReport report;
  report.curve_name = curve->name;
  report.security_strength = curve->security_strength;
  report.n_records = options.n;
  report.parallel = options.parallel;

  std::vector<HashPoint> hashes;
  if (options.parallel) {
    const auto start = Clock::now();
    hashes = hash_batch_parallel(records, curve);
    report.hash_gen_mean_ms = ms_since(start) / static_cast<double>(options.n);
  } else {
    hashes.reserve(records.size());
    double total = 0;
    for (const auto& r : records) {
      const auto start = Clock::now();
      hashes.push_back(hash_record(r, curve));
      total += ms_since(start);
    }
    report.hash_gen_mean_ms = total / static_cast<double>(options.n);
  }

  const auto start = Clock::now();
  const HashPoint sum = options.parallel ? aggregate_parallel(hashes) : aggregate(hashes);
  report.aggregate_total_ms = ms_since(start);
  report.aggregate_per_item_ms = report.aggregate_total_ms / static_cast<double>(options.n - 1);
  report.aggregate_hex = encode_point(sum);
  return report;
}

std::vector<BenchReport> run_bench(const BenchOptions& options,
                                   const std::function<void(const BenchReport&)>& on_report) {
  if (options.n < 2) {
    throw Error(ErrorCode::kUsage, "bench needs n >= 2, got " + std::to_string(options.n));
  }
  std::vector<CurveRef> curves = options.curves;
  if (curves.empty()) curves.assign(registered_curves().begin(), registered_curves().end());
  std::vector<BenchReport> out;
  for (const auto& c : curves) {
    out.push_back(run_bench_curve(c, options));
    if (on_report) on_report(out.back());
  }
  return out;
}

std::optional<ReferenceTiming> reference_timing(int security_strength) {
  for (const auto& r : kReference) {
    if (r.security_strength == security_strength) return r;
  }
  return std::nullopt;
}

BenchWriter::BenchWriter(std::ostream& out, BenchFormat format, const BenchOptions& options)
    : out_(out), format_(format), options_(options) {}

void BenchWriter::header() {
  const std::string mode = options_.parallel
                               ? "parallel (" + std::to_string(parallel_threads()) +
                                     " threads, batched inversion; hash time is wall clock / n, not per item)"
                               : "sequential";
  const std::string note =
      "hash time covers hash_record only; scalars are generated before timing";
  if (format_ == BenchFormat::kCsv) {
    out_ << "# ecchash bench n=" << options_.n << " seed=" << options_.seed << " mode=" << mode
         << "\n# " << note << "\n";
    for (const auto& r : kReference) {
      out_ << "# reference strength=" << r.security_strength
           << " hash_gen_mean_ms=" << fmt(r.hash_gen_mean_ms)
           << " agg_total_ms=" << fmt(r.aggregate_total_ms) << " (other hardware, n=10000)\n";
    }
    out_ << "curve,strength_bits,n,hash_gen_mean_ms,agg_total_ms,agg_per_item_ms\n";
  } else {
    out_ << "ecchash bench, n = " << options_.n << ", seed = " << options_.seed
         << ", mode = " << mode << ". Times in ms; " << note << ".\n\n"
         << "| curve | strength (bits) | n | hash gen mean | agg total | agg per item "
            "| ref hash gen | ref agg total |\n"
         << "|---|---:|---:|---:|---:|---:|---:|---:|\n";
  }
  out_.flush();
}

void BenchWriter::row(const BenchReport& r) {
  seen_.push_back(r);
  if (format_ == BenchFormat::kCsv) {
    out_ << r.curve_name << ',' << r.security_strength << ',' << r.n_records << ','
         << fmt(r.hash_gen_mean_ms) << ',' << fmt(r.aggregate_total_ms) << ','
         << fmt(r.aggregate_per_item_ms) << "\n# aggregate " << r.curve_name << ' '
         << r.aggregate_hex << '\n';
  } else {
    const auto ref = reference_timing(r.security_strength);
    out_ << "| " << r.curve_name << " | " << r.security_strength << " | " << r.n_records
         << " | " << fmt(r.hash_gen_mean_ms) << " | " << fmt(r.aggregate_total_ms) << " | "
         << fmt(r.aggregate_per_item_ms) << " | "
         << (ref ? fmt(ref->hash_gen_mean_ms) : std::string("-")) << " | "
         << (ref ? fmt(ref->aggregate_total_ms) : std::string("-")) << " |\n";
  }
  out_.flush();
}

void BenchWriter::footer() {
  if (format_ == BenchFormat::kMarkdown) {
    out_ << "\nReference columns were measured on other hardware and are for scale only.\n";
    for (const auto& r : seen_) out_ << "\naggregate " << r.curve_name << ": " << r.aggregate_hex;
    out_ << '\n';
  }
  out_.flush();
}

}  // namespace ecchash
