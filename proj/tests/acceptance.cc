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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails. Pass criterion names as arguments to run a
// subset.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "ecchash/batch.h"
#include "ecchash/curve.h"
#include "ecchash/error.h"
#include "ecchash/homhash.h"
#include "ecchash/ledger.h"
#include "ecchash/vectors.h"

namespace ecchash {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

BigInt random_scalar(std::mt19937_64& rng, const BigInt& order) {
  std::vector<std::uint64_t> limbs(order.limb_count() + 1);
  for (auto& l : limbs) l = rng();
  return BigInt::from_limbs(limbs).mod(order - BigInt(1)) + BigInt(1);
}

Outcome three_point_identity() {
  Outcome o;
  const CurveRef c = curve_registry("P-224");
  const Point g = base_point(c);
  const Point g2 = point_double(g);
  const Point left = point_add(g, g2), right = point_add(g2, g), g3 = scalar_mul(BigInt(3), g);
  o.require(left == right, "G + 2G != 2G + G");
  o.require(left == g3, "G + 2G != 3G");
  o.require(is_on_curve(g3), "3G off curve");
  if (o.passed) o.detail = "3G x = " + g3.x().value().to_hex(true);
  return o;
}

// Compares `printed` to `want` skipping characters that are not hex digits
// in `printed` (typeset letter O for zero). Returns the number compared.
std::size_t compare_unambiguous(std::string_view printed, std::string_view want, bool& equal) {
  equal = printed.size() == want.size();
  std::size_t compared = 0;
  for (std::size_t i = 0; equal && i < printed.size(); ++i) {
    if (!std::isxdigit(static_cast<unsigned char>(printed[i]))) continue;
    ++compared;
    equal = printed[i] == want[i];
  }
  return compared;
}

Outcome worked_example() {
  Outcome o;
  const CurveRef c = curve_registry(vectors::kCurve);
  std::vector<PlaintextRecord> records;
  std::vector<HashPoint> hashes;
  for (auto t : vectors::kRecords) {
    records.push_back(PlaintextRecord::parse(t));
    hashes.push_back(hash_record(records.back(), c));
  }
  for (std::size_t i = 0; i < hashes.size(); ++i) {
    o.require(hashes[i].x().to_hex(true) == vectors::kHashes[i].x,
              "h" + std::to_string(i + 1) + " x differs");
    o.require(hashes[i].y().to_hex(true) == vectors::kHashes[i].y,
              "h" + std::to_string(i + 1) + " y differs");
  }
  // The typeset y of h1 carries one doubled digit; removing exactly one
  // character must give the computed value.
  const std::string printed(vectors::kPrintedHash1Y);
  bool explained = false;
  for (std::size_t i = 0; i < printed.size() && !explained; ++i) {
    std::string t = printed;
    t.erase(i, 1);
    explained = t == hashes[0].y().to_hex(true);
  }
  o.require(explained, "typeset h1 y is not a one-character slip of the computed value");

  const HashPoint sum = aggregate(hashes);
  o.require(sum == hash_of_sum(records, c), "aggregate != hash_of_sum");
  o.require(sum.x().to_hex(true) == vectors::kSum.x, "sum x differs");
  bool y_equal = false;
  const std::size_t compared =
      compare_unambiguous(vectors::kPrintedSumY, sum.y().to_hex(true), y_equal);
  o.require(y_equal, "sum y differs on unambiguous digits");
  if (o.passed) {
    o.detail = "h1..h3 exact; aggregate == hash_of_sum; sum x exact, sum y " +
               std::to_string(compared) + "/" + std::to_string(vectors::kPrintedSumY.size()) +
               " unambiguous digits equal; typeset h1 y has one doubled digit";
  }
  return o;
}

Outcome homomorphism_suite() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(20261014);
  constexpr int kCounts[] = {1, 2, 10, 100, 1000};
  std::size_t hashes_done = 0, failures = 0;
  for (const auto& c : registered_curves()) {
    for (int trial = 0; trial < 100; ++trial) {
      const int n = kCounts[rng() % 5];
      std::vector<PlaintextRecord> records;
      records.reserve(n);
      for (int i = 0; i < n; ++i) records.push_back({random_scalar(rng, c->order)});
      BigInt sum;
      for (const auto& r : records) sum += r.value;
      if (sum.mod(c->order).is_zero()) continue;  // unencodable; 2^-190 odds
      const auto hashes = hash_batch_parallel(records, c);
      hashes_done += hashes.size();
      if (!(aggregate(hashes) == hash_of_sum(records, c))) ++failures;
    }
  }
  const double secs = seconds_since(start);
  o.require(failures == 0, std::to_string(failures) + " trials disagree");
  o.require(secs < 300, "took " + fixed(secs, 1) + " s, limit 300 s");
  o.detail = (o.passed ? "" : o.detail + "; ") + "500 trials, " + std::to_string(hashes_done) +
             " hashes, 0 allowed failures, " + fixed(secs, 1) + " s";
  return o;
}

Outcome group_laws() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::size_t checks = 0;
  for (const auto& c : registered_curves()) {
    const Point g = base_point(c);
    const Point id = Point::identity(c);
    std::vector<Point> pts;
    for (int i = 0; i < 1000; ++i) pts.push_back(scalar_mul(random_scalar(rng, c->order), g));
    auto closed = [&](const Point& p) {
      ++checks;
      if (!is_on_curve(p)) o.require(false, c->name + " closure");
    };
    for (const auto& p : pts) closed(p);
    for (int i = 0; i < 1000; ++i) {
      const Point& p = pts[i];
      const Point& q = pts[(i * 7 + 1) % 1000];
      const Point pq = point_add(p, q);
      closed(pq);
      closed(point_double(p));
      if (!(pq == point_add(q, p))) o.require(false, c->name + " commutativity");
      if (!(point_add(p, id) == p) || !(point_add(id, p) == p)) {
        o.require(false, c->name + " identity law");
      }
      if (!point_add(p, point_neg(p)).is_identity()) o.require(false, c->name + " inverse law");
      checks += 3;
    }
    for (int i = 0; i < 200; ++i) {
      const Point& p = pts[i];
      const Point& q = pts[(i + 300) % 1000];
      const Point& r = pts[(i + 600) % 1000];
      ++checks;
      if (!(point_add(point_add(p, q), r) == point_add(p, point_add(q, r)))) {
        o.require(false, c->name + " associativity");
      }
    }
    for (int i = 0; i < 20; ++i) {
      const BigInt a = random_scalar(rng, c->order), b = random_scalar(rng, c->order);
      ++checks;
      if (!(scalar_mul(a + b, g) == point_add(scalar_mul(a, g), scalar_mul(b, g)))) {
        o.require(false, c->name + " distributivity");
      }
    }
    if (!point_double(g).is_identity() && !(point_add(g, g) == point_double(g))) {
      o.require(false, c->name + " G + G != 2G");
    }
  }
  if (o.passed) {
    o.detail = std::to_string(checks) +
               " checks: closure, 1000 commutative pairs, 200 associative triples, identity, "
               "inverse, distributivity per curve";
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  const CurveRef c = curve_registry("P-192");
  const Point g = base_point(c);
  Point acc = Point::identity(c);
  int mismatches = 0;
  for (int k = 1; k <= 512; ++k) {
    acc = point_add(acc, g);
    if (!(scalar_mul(BigInt(k), g) == acc)) ++mismatches;
  }
  const double secs = seconds_since(start);
  o.require(mismatches == 0, std::to_string(mismatches) + " k disagree");
  o.require(secs < 60, "took " + fixed(secs, 1) + " s, limit 60 s");
  if (o.passed) o.detail = "k = 1..512 on P-192 exact, " + fixed(secs, 2) + " s";
  return o;
}

Outcome registry() {
  Outcome o;
  const std::pair<const char*, int> table[] = {
      {"P-192", 80}, {"P-224", 112}, {"P-256", 128}, {"P-384", 192}, {"P-521", 256}};
  o.require(registered_curves().size() == 5, "expected five curves");
  for (const auto& [name, strength] : table) {
    const CurveRef c = curve_registry(name);
    o.require(c->security_strength == strength, std::string(name) + " strength");
    o.require(is_on_curve(base_point(c)), std::string(name) + " G off curve");
    o.require(scalar_mul(c->order, base_point(c)).is_identity(),
              std::string(name) + " order * G not identity");
  }
  const CurveRef p224 = curve_registry("P-224");
  o.require(p224->gx.value().to_decimal() ==
                "19277929113566293071110308034699488026831934219452440156649784352033",
            "P-224 Gx");
  o.require(p224->a.value().to_decimal() ==
                "26959946667150639794667015087019630673557916260026308143510066298878",
            "P-224 a");
  o.require(p224->p().to_decimal() ==
                "26959946667150639794667015087019630673557916260026308143510066298881",
            "P-224 p");
  if (o.passed) o.detail = "5 curves: strength labels, G on curve, order * G = identity";
  return o;
}

struct BenchRow {
  std::string curve;
  double gen = 0, total = 0, per_item = 0;
};

Outcome bench_shape() {
  Outcome o;
  const auto start = Clock::now();
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run_cli({"bench", "--n", "10000", "--seed", "1"}, in, out, err);
  const double secs = seconds_since(start);
  o.require(code == 0, "bench exited " + std::to_string(code) + ": " + err.str());

  std::vector<BenchRow> rows;
  std::istringstream lines(out.str());
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("curve,", 0) == 0) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 6 || f[2] != "10000") {
      o.require(false, "bad row '" + line + "'");
      continue;
    }
    rows.push_back({f[0], std::stod(f[3]), std::stod(f[4]), std::stod(f[5])});
  }
  o.require(rows.size() == 5, "expected 5 rows, got " + std::to_string(rows.size()));
  std::string summary;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    o.require(r.gen < 50, r.curve + " mean hash " + fixed(r.gen) + " ms >= 50");
    o.require(r.total < 2000, r.curve + " aggregate " + fixed(r.total) + " ms >= 2000");
    o.require(r.per_item * 10 <= r.gen, r.curve + " per-item aggregate not 10x below hash");
    if (i > 0) {
      o.require(r.gen >= 0.8 * rows[i - 1].gen,
                r.curve + " hashes >20% faster than " + rows[i - 1].curve);
    }
    summary += (i ? ", " : "") + r.curve + " " + fixed(r.gen) + "/" + fixed(r.total, 1) + " ms";
  }
  o.require(secs < 600, "full run took " + fixed(secs, 1) + " s");
  o.detail = (o.passed ? "" : o.detail + "; ") + "gen mean/agg total: " + summary + "; " +
             fixed(secs, 1) + " s; monotone within 20%";
  return o;
}

Outcome ledger_round_trip() {
  Outcome o;
  const auto start = Clock::now();
  const fs::path dir = fs::temp_directory_path() / "ecchash_acceptance_ledger";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path path = dir / "ledger.csv";
  const CurveRef c = curve_registry("P-224");
  std::mt19937_64 rng(99);

  std::vector<PlaintextRecord> records;
  for (int i = 0; i < 1000; ++i) {
    records.push_back({random_scalar(rng, c->order)});
    ledger_append(path, LedgerEntry::from_hash("rec" + std::to_string(i),
                                               hash_record(records.back(), c)));
  }
  o.require(ledger_load(path).size() == 1000, "reload count");
  o.require(ledger_aggregate(path, c->name) == hash_of_sum(records, c),
            "ledger aggregate != hash_of_sum");

  std::string bytes;
  {
    std::ifstream f(path, std::ios::binary);
    bytes.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  // Byte ranges of each entry's point_hex.
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (std::size_t pos = 0; pos < bytes.size();) {
    const std::size_t eol = bytes.find('\n', pos);
    const std::size_t hex = bytes.rfind(',', eol) + 1;
    spans.emplace_back(hex, eol);
    pos = eol + 1;
  }
  const fs::path bad = dir / "corrupt.csv";
  std::size_t corruptions = 0, caught = 0;
  auto corrupt_and_load = [&](std::size_t at) {
    std::string copy = bytes;
    const char was = copy[at];
    const char* digits = "0123456789abcdef";
    char now = digits[rng() % 16];
    while (now == was) now = digits[rng() % 16];
    copy[at] = now;
    std::ofstream(bad, std::ios::binary | std::ios::trunc) << copy;
    ++corruptions;
    try {
      ledger_load(bad);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kIntegrity || e.code() == ErrorCode::kParse) ++caught;
    }
  };
  // Every digit of three entries, one random digit of every entry.
  for (std::size_t e : {std::size_t{0}, spans.size() / 2, spans.size() - 1}) {
    for (std::size_t at = spans[e].first; at < spans[e].second; ++at) corrupt_and_load(at);
  }
  for (const auto& [lo, hi] : spans) corrupt_and_load(lo + rng() % (hi - lo));
  fs::remove_all(dir);

  const double secs = seconds_since(start);
  o.require(caught == corruptions, std::to_string(corruptions - caught) + " of " +
                                       std::to_string(corruptions) + " corruptions loaded");
  o.require(secs < 60, "took " + fixed(secs, 1) + " s, limit 60 s");
  o.detail = (o.passed ? "" : o.detail + "; ") +
             "1000 records round-trip; " + std::to_string(caught) + "/" +
             std::to_string(corruptions) + " single-digit corruptions rejected; " +
             fixed(secs, 1) + " s";
  return o;
}

struct Criterion {
  const char* name;
  Outcome (*run)();
};

constexpr Criterion kCriteria[] = {
    {"three-point-identity", three_point_identity},
    {"worked-example", worked_example},
    {"homomorphism-suite", homomorphism_suite},
    {"group-laws", group_laws},
    {"oracle-equivalence", oracle_equivalence},
    {"registry", registry},
    {"bench-shape", bench_shape},
    {"ledger-round-trip", ledger_round_trip},
};

}  // namespace
}  // namespace ecchash

int main(int argc, char** argv) {
  using namespace ecchash;
  std::vector<std::string> only(argv + 1, argv + argc);
  int failed = 0;
  for (const auto& c : kCriteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.name) == only.end()) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("threw: ") + e.what();
    }
    std::printf("%s %s: %s\n", o.passed ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.passed;
  }
  return failed == 0 ? 0 : 1;
}
