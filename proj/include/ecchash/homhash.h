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

#ifndef ECCHASH_HOMHASH_H_
#define ECCHASH_HOMHASH_H_

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecchash/bigint.h"
#include "ecchash/curve.h"

namespace ecchash {

// Additively homomorphic hash h(p) = (p mod n) * G, where n is the order of
// the base point G. Sums of records map to sums of hashes.
//
// Threat model: h is only as one-way as the discrete logarithm of the
// scalar. Small or low-entropy plaintexts (a few dozen bits) can be
// recovered by exhaustive search or baby-step giant-step; preimage
// resistance holds only for high-entropy scalars close to the order in
// size. Records that are congruent modulo n collide by construction.

struct PlaintextRecord {
  BigInt value;

  // Decimal, or hexadecimal after a 0x/0X prefix. Negative values and
  // anything else are Error(kParse).
  static PlaintextRecord parse(std::string_view text);
  // Big-endian unsigned.
  static PlaintextRecord from_bytes(std::span<const std::uint8_t> bytes);
};

// One record per line. Surrounding whitespace is ignored and blank lines are
// skipped. Throws Error(kParse) naming the offending 1-based line.
std::vector<PlaintextRecord> parse_records(std::istream& in);

// A non-identity point that lies on its curve.
class HashPoint {
 public:
  // Throws Error(kDegenerateAggregate) for the identity and
  // Error(kInvalidPoint) for an off-curve point.
  static HashPoint from_point(Point point);

  const Point& point() const noexcept { return point_; }
  const CurveParams& curve() const noexcept { return point_.curve(); }
  const CurveRef& curve_ref() const noexcept { return point_.curve_ref(); }
  const std::string& curve_name() const noexcept { return point_.curve_name(); }
  const BigInt& x() const { return point_.x().value(); }
  const BigInt& y() const { return point_.y().value(); }

  friend bool operator==(const HashPoint& lhs, const HashPoint& rhs) noexcept {
    return lhs.point_ == rhs.point_;
  }

 private:
  friend HashPoint make_trusted_hash_point(Point point);
  explicit HashPoint(Point point) : point_(std::move(point)) {}

  Point point_;
};

// Throws Error(kDegenerateRecord) when value = 0 mod order.
HashPoint hash_record(const PlaintextRecord& record, const CurveRef& curve);

// Left-to-right point_add fold. Throws Error(kEmptyAggregate) on no input,
// Error(kIncompatibleCurves) on mixed curves and Error(kDegenerateAggregate)
// when the sum is the identity.
HashPoint aggregate(std::span<const HashPoint> hashes);

// (sum of values mod order) * G. Throws Error(kDegenerateRecord) when the
// sum is 0 mod order, including for an empty collection.
HashPoint hash_of_sum(std::span<const PlaintextRecord> records, const CurveRef& curve);

// hash_of_sum(records) == claimed. A claim on another curve is simply
// false. Throws Error(kEmptyAggregate) for no records.
bool verify_homomorphism(std::span<const PlaintextRecord> records, const HashPoint& claimed,
                         const CurveRef& curve);

// Uncompressed octet string 04 || X || Y, coordinates zero-padded to the
// field byte length, as lowercase hex.
std::string encode_point(const HashPoint& hash);
// "(X,Y)" in uppercase hex without padding.
std::string encode_display(const HashPoint& hash);

// Inverse of encode_point; hex digits of either case. Throws Error(kDecode)
// on bad hex, a wrong prefix or length, a coordinate >= p, or an off-curve
// point.
HashPoint decode_point(std::string_view hex, const CurveRef& curve);
// Inverse of encode_display; also accepts whitespace around the
// coordinates. Throws Error(kDecode).
HashPoint decode_display(std::string_view text, const CurveRef& curve);

// Coordinates from either encoding (display if the text starts with '('),
// checked for shape only, not range or curve membership. Throws
// Error(kDecode).
struct RawCoordinates {
  BigInt x;
  BigInt y;
};
RawCoordinates parse_coordinates(std::string_view text, const CurveParams& curve);

// True when `hex` has the exact shape encode_point produces for `curve`:
// lowercase hex, 04 prefix, right length. Says nothing about the curve
// equation.
bool is_canonical_encoding(std::string_view hex, const CurveParams& curve);

}  // namespace ecchash

#endif  // ECCHASH_HOMHASH_H_
