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

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ecchash/bench.h"
#include "ecchash/homhash.h"
#include "ecchash/ledger.h"
#include "ecchash/selftest.h"

namespace ecchash::cli {
namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::vector<PlaintextRecord> read_records(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return parse_records(stdin_stream);
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kStorage, "cannot open record file " + path);
  try {
    return parse_records(file);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

int cmd_hash(const Streams& io, const std::string& curve_name, const std::string& in_path,
             const std::string& ledger, const std::string& id_prefix) {
  const CurveRef curve = curve_registry(curve_name);
  const auto records = read_records(in_path, io.in);
  if (records.empty()) {
    io.err << "warning: " << in_path << " contains no records\n";
    return kOk;
  }
  std::vector<HashPoint> hashes;
  hashes.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    try {
      hashes.push_back(hash_record(records[i], curve));
    } catch (const Error& e) {
      throw Error(e.code(), "record " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < hashes.size(); ++i) {
    io.out << i + 1 << " -> " << encode_display(hashes[i]) << '\n';
  }
  if (!ledger.empty()) {
    std::vector<LedgerEntry> entries;
    for (std::size_t i = 0; i < hashes.size(); ++i) {
      entries.push_back(LedgerEntry::from_hash(id_prefix + std::to_string(i + 1), hashes[i]));
    }
    ledger_append_all(ledger, entries);
    io.err << "appended " << entries.size() << " entries to " << ledger << '\n';
  }
  return kOk;
}

// Canonical hex or the "(X,Y)" display form. nullopt when the text is
// well-formed but does not name a point of the curve.
std::optional<HashPoint> parse_claim(const std::string& text, const CurveRef& curve,
                                     std::string& why) {
  RawCoordinates c;
  try {
    c = parse_coordinates(text, *curve);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, std::string("claimed point: ") + e.what());
  }
  if (c.x >= curve->p() || c.y >= curve->p()) {
    why = "coordinate not reduced modulo p";
    return std::nullopt;
  }
  Point pt = Point::affine(curve, c.x, c.y);
  if (!is_on_curve(pt)) {
    why = "not a point of " + curve->name;
    return std::nullopt;
  }
  return HashPoint::from_point(std::move(pt));
}

int cmd_verify(const Streams& io, const std::string& curve_name, const std::string& in_path,
               const std::string& ledger, const std::string& claimed_text) {
  const CurveRef curve = curve_registry(curve_name);
  const auto records = read_records(in_path, io.in);
  if (records.empty()) throw Error(ErrorCode::kEmptyAggregate, in_path + " contains no records");

  std::optional<HashPoint> claimed;
  std::string why;
  if (!ledger.empty()) {
    claimed = ledger_aggregate(ledger, curve->name);
  } else {
    claimed = parse_claim(claimed_text, curve, why);
  }
  const HashPoint expected = hash_of_sum(records, curve);
  const bool match = claimed && verify_homomorphism(records, *claimed, curve);
  io.out << (match ? "MATCH" : "MISMATCH") << '\n';
  io.out << "hash of sum:  " << encode_display(expected) << '\n';
  if (claimed) {
    io.out << "claimed:      " << encode_display(*claimed) << '\n';
  } else {
    io.out << "claimed:      rejected (" << why << ")\n";
  }
  return match ? kOk : kMismatch;
}

int cmd_aggregate(const Streams& io, const std::string& curve_name, const std::string& ledger) {
  const HashPoint sum = ledger_aggregate(ledger, curve_registry(curve_name)->name);
  io.out << encode_display(sum) << '\n' << encode_point(sum) << '\n';
  return kOk;
}

int cmd_selftest(const Streams& io, const std::string& fault) {
  SelfTestFaults faults;
  if (fault == "p224-gy") {
    faults.corrupt_p224_gy = true;
  } else if (!fault.empty()) {
    throw Error(ErrorCode::kUsage, "unknown fault '" + fault + "'");
  }
  bool all = true;
  for (const auto& c : run_selftest(faults)) {
    io.out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) io.out << ": " << c.detail;
    io.out << '\n';
    all = all && c.passed;
  }
  io.out << (all ? "selftest passed" : "selftest FAILED") << '\n';
  return all ? kOk : kSelfTestFailed;
}

int cmd_bench(const Streams& io, long long n, const std::string& curves, std::uint64_t seed,
              const std::string& format, bool parallel) {
  if (n < 2) throw Error(ErrorCode::kUsage, "--n must be at least 2");
  BenchOptions options;
  options.n = static_cast<std::size_t>(n);
  options.seed = seed;
  options.parallel = parallel;
  if (curves != "all") {
    std::stringstream list(curves);
    std::string name;
    while (std::getline(list, name, ',')) {
      if (!name.empty()) options.curves.push_back(curve_registry(name));
    }
    if (options.curves.empty()) throw Error(ErrorCode::kUsage, "--curves lists no curves");
  }
  BenchWriter writer(io.out, format == "markdown" ? BenchFormat::kMarkdown : BenchFormat::kCsv,
                     options);
  writer.header();
  run_bench(options, [&](const BenchReport& r) { writer.row(r); });
  writer.footer();
  return kOk;
}

}  // namespace

ExitCode exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kDecode:
      return kParseError;
    case ErrorCode::kDegenerateRecord:
    case ErrorCode::kDegenerateAggregate:
    case ErrorCode::kEmptyAggregate:
      return kDegenerateInput;
    case ErrorCode::kStorage:
    case ErrorCode::kDuplicateEntry:
      return kStorageError;
    case ErrorCode::kIntegrity:
    case ErrorCode::kInvalidPoint:
    case ErrorCode::kIncompatibleCurves:
      return kIntegrityError;
    default:
      return kUsageError;
  }
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Additively homomorphic hashing on the NIST P-curves", "ecchash"};
  app.require_subcommand(1);

  std::string curve = "P-224", in_path, ledger, claimed, id_prefix = "r", fault;
  std::string bench_curves = "all", format = "csv";
  long long n = 10000;
  std::uint64_t seed = 1;
  bool parallel = false;

  auto* hash = app.add_subcommand("hash", "hash each record and print the points");
  hash->add_option("--curve", curve, "curve name")->capture_default_str();
  hash->add_option("--in", in_path, "record file, one integer per line ('-' for stdin)")
      ->required();
  hash->add_option("--ledger", ledger, "append every hash to this ledger");
  hash->add_option("--id-prefix", id_prefix, "ledger ids are <prefix><index>")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "compare the hash of the record sum to a claim");
  verify->add_option("--curve", curve, "curve name")->capture_default_str();
  verify->add_option("--in", in_path, "record file ('-' for stdin)")->required();
  auto* ledger_opt = verify->add_option("--ledger", ledger, "claim is this ledger's aggregate");
  auto* claimed_opt =
      verify->add_option("--claimed", claimed, "claim as 04||X||Y hex or (X,Y)");
  ledger_opt->excludes(claimed_opt);

  auto* agg = app.add_subcommand("aggregate", "print the sum of a ledger's points");
  agg->add_option("--curve", curve, "curve name")->capture_default_str();
  agg->add_option("--ledger", ledger, "ledger file")->required();

  auto* selftest = app.add_subcommand("selftest", "run the embedded known-answer checks");
  selftest->add_option("--inject-fault", fault, "damage the run on purpose (p224-gy)");

  auto* bench = app.add_subcommand("bench", "time hashing and aggregation per curve");
  bench->add_option("--n", n, "records per curve")->capture_default_str();
  bench->add_option("--curves", bench_curves, "comma-separated curve list or 'all'")
      ->capture_default_str();
  bench->add_option("--seed", seed, "record generator seed")->capture_default_str();
  bench->add_option("--format", format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}))
      ->capture_default_str();
  bench->add_flag("--parallel", parallel, "use the OpenMP kernels; reports throughput");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  const Streams io{in, out, err};
  try {
    if (*hash) return cmd_hash(io, curve, in_path, ledger, id_prefix);
    if (*verify && ledger.empty() && claimed.empty()) {
      err << "verify needs --ledger or --claimed\n";
      return kUsageError;
    }
    if (*verify) return cmd_verify(io, curve, in_path, ledger, claimed);
    if (*agg) return cmd_aggregate(io, curve, ledger);
    if (*selftest) return cmd_selftest(io, fault);
    if (*bench) return cmd_bench(io, n, bench_curves, seed, format, parallel);
  } catch (const Error& e) {
    err << "error (" << error_code_name(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsageError;
}

}  // namespace ecchash::cli
