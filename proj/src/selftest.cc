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

#include "ecchash/selftest.h"

#include <exception>
#include <functional>
#include <memory>

#include "ecchash/homhash.h"
#include "ecchash/vectors.h"

namespace ecchash {
namespace {

CurveRef with_bad_gy(const CurveRef& c) {
  const BigInt gy = (c->gy.value() + BigInt(1)).mod(c->p());
  return std::make_shared<const CurveParams>(c->name, c->security_strength, c->p(),
                                             c->a.value(), c->b.value(), c->gx.value(), gy,
                                             c->order);
}

// `body` returns an empty string on success, else what went wrong.
void check(std::vector<SelfTestCheck>& out, std::string name,
           const std::function<std::string()>& body) {
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("threw: ") + e.what();
  }
  const bool ok = detail.empty();
  out.push_back({std::move(name), ok, ok ? "ok" : detail});
}

std::string expect_coords(const HashPoint& h, const vectors::Coords& want) {
  const std::string x = h.x().to_hex(true), y = h.y().to_hex(true);
  if (x == want.x && y == want.y) return {};
  return "got (" + x + "," + y + ")";
}

}  // namespace

std::vector<SelfTestCheck> run_selftest(const SelfTestFaults& faults) {
  std::vector<SelfTestCheck> out;
  CurveRef p224 = curve_registry(vectors::kCurve);
  if (faults.corrupt_p224_gy) p224 = with_bad_gy(p224);

  for (CurveRef curve : registered_curves()) {
    if (curve->name == p224->name) curve = p224;
    check(out, curve->name + " base point on curve",
          [&] { return is_on_curve(base_point(curve)) ? "" : "G fails the curve equation"; });
    check(out, curve->name + " order * G is the identity", [&] {
      return scalar_mul(curve->order, base_point(curve)).is_identity() ? "" : "nonzero result";
    });
  }

  check(out, "P-224 G + 2G == 2G + G == 3G", [&] {
    const Point g = base_point(p224);
    const Point g2 = point_double(g);
    const Point left = point_add(g, g2), right = point_add(g2, g);
    if (!(left == right)) return "G + 2G differs from 2G + G";
    if (!(left == scalar_mul(BigInt(3), g))) return "G + 2G differs from 3G";
    return "";
  });

  std::vector<PlaintextRecord> records;
  for (auto text : vectors::kRecords) records.push_back(PlaintextRecord::parse(text));
  for (std::size_t i = 0; i < records.size(); ++i) {
    check(out, "P-224 hash of " + std::string(vectors::kRecords[i]), [&] {
      return expect_coords(hash_record(records[i], p224), vectors::kHashes[i]);
    });
  }
  check(out, "P-224 sum of hashes == hash of sum", [&] {
    std::vector<HashPoint> hashes;
    for (const auto& r : records) hashes.push_back(hash_record(r, p224));
    const HashPoint sum = aggregate(hashes);
    if (!(sum == hash_of_sum(records, p224))) return std::string("aggregate != hash_of_sum");
    return expect_coords(sum, vectors::kSum);
  });
  return out;
}

}  // namespace ecchash
