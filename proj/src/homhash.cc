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

#include "ecchash/homhash.h"

#include <string>
#include <utility>

#include "ecchash/error.h"
#include "homhash_internal.h"

namespace ecchash {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

bool is_hex_digit(char c, bool allow_upper) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
         (allow_upper && c >= 'A' && c <= 'F');
}

bool all_hex(std::string_view s, bool allow_upper) {
  for (char c : s) {
    if (!is_hex_digit(c, allow_upper)) return false;
  }
  return true;
}

Point checked_affine(const CurveRef& curve, const BigInt& x, const BigInt& y) {
  if (x >= curve->p() || y >= curve->p()) {
    throw Error(ErrorCode::kDecode, "coordinate is not reduced modulo p");
  }
  Point pt = Point::affine(curve, x, y);
  if (!is_on_curve(pt)) {
    throw Error(ErrorCode::kDecode, "point is not on " + curve->name);
  }
  return pt;
}

}  // namespace

HashPoint make_trusted_hash_point(Point point) { return HashPoint(std::move(point)); }

PlaintextRecord PlaintextRecord::parse(std::string_view text) {
  if (!text.empty() && text.front() == '-') {
    throw Error(ErrorCode::kParse, "negative plaintext '" + std::string(text) + "'");
  }
  return PlaintextRecord{BigInt::parse(text)};
}

PlaintextRecord PlaintextRecord::from_bytes(std::span<const std::uint8_t> bytes) {
  return PlaintextRecord{BigInt::from_bytes_be(bytes)};
}

std::vector<PlaintextRecord> parse_records(std::istream& in) {
  std::vector<PlaintextRecord> records;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    try {
      records.push_back(PlaintextRecord::parse(body));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (in.bad()) throw Error(ErrorCode::kParse, "read error in record input");
  return records;
}

HashPoint HashPoint::from_point(Point point) {
  if (point.is_identity()) {
    throw Error(ErrorCode::kDegenerateAggregate, "the identity is not a hash value");
  }
  if (!is_on_curve(point)) {
    throw Error(ErrorCode::kInvalidPoint, "point is not on " + point.curve_name());
  }
  return make_trusted_hash_point(std::move(point));
}

BigInt hash_exponent(const BigInt& value, const CurveParams& curve) {
  BigInt k = value.mod(curve.order);
  if (k.is_zero()) {
    throw Error(ErrorCode::kDegenerateRecord, "plaintext is 0 modulo the order of " + curve.name);
  }
  return k;
}

HashPoint hash_scalar(const BigInt& value, const CurveRef& curve) {
  return make_trusted_hash_point(scalar_mul(hash_exponent(value, *curve), base_point(curve)));
}

HashPoint hash_record(const PlaintextRecord& record, const CurveRef& curve) {
  return hash_scalar(record.value, curve);
}

void require_same_curve(const HashPoint& a, const HashPoint& b) {
  if (a.point().curve_ref() != b.point().curve_ref() && a.curve_name() != b.curve_name()) {
    throw Error(ErrorCode::kIncompatibleCurves,
                "cannot aggregate " + a.curve_name() + " with " + b.curve_name());
  }
}

Point fold(std::span<const HashPoint> hashes) {
  Point acc = hashes.front().point();
  for (std::size_t i = 1; i < hashes.size(); ++i) {
    require_same_curve(hashes.front(), hashes[i]);
    acc = point_add_unchecked(acc, hashes[i].point());
  }
  return acc;
}

HashPoint finish_aggregate(Point sum) {
  if (sum.is_identity()) {
    throw Error(ErrorCode::kDegenerateAggregate, "hashes sum to the identity");
  }
  return make_trusted_hash_point(std::move(sum));
}

HashPoint aggregate(std::span<const HashPoint> hashes) {
  if (hashes.empty()) throw Error(ErrorCode::kEmptyAggregate, "nothing to aggregate");
  return finish_aggregate(fold(hashes));
}

HashPoint hash_of_sum(std::span<const PlaintextRecord> records, const CurveRef& curve) {
  BigInt sum;
  for (const auto& r : records) sum += r.value;
  return hash_scalar(sum, curve);
}

bool verify_homomorphism(std::span<const PlaintextRecord> records, const HashPoint& claimed,
                         const CurveRef& curve) {
  if (records.empty()) throw Error(ErrorCode::kEmptyAggregate, "no records to verify");
  const HashPoint expected = hash_of_sum(records, curve);
  return expected.curve_name() == claimed.curve_name() && expected == claimed;
}

std::string encode_point(const HashPoint& hash) {
  const std::size_t width = hash.curve().coordinate_bytes();
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 + 4 * width);
  out += "04";
  for (const BigInt* c : {&hash.x(), &hash.y()}) {
    for (std::uint8_t byte : c->to_bytes_be(width)) {
      out += kDigits[byte >> 4];
      out += kDigits[byte & 0xf];
    }
  }
  return out;
}

std::string encode_display(const HashPoint& hash) {
  return "(" + hash.x().to_hex(true) + "," + hash.y().to_hex(true) + ")";
}

bool is_canonical_encoding(std::string_view hex, const CurveParams& curve) {
  const std::size_t digits = 4 * curve.coordinate_bytes();
  return hex.size() == 2 + digits && hex.substr(0, 2) == "04" && all_hex(hex, false);
}

namespace {

RawCoordinates hex_coordinates(std::string_view hex, const CurveParams& curve) {
  const std::size_t digits = 2 * curve.coordinate_bytes();
  if (hex.size() != 2 + 2 * digits) {
    throw Error(ErrorCode::kDecode, "encoded " + curve.name + " point must have " +
                                        std::to_string(2 + 2 * digits) + " hex digits, got " +
                                        std::to_string(hex.size()));
  }
  if (!all_hex(hex, true)) throw Error(ErrorCode::kDecode, "malformed hex in encoded point");
  if (hex.substr(0, 2) != "04") {
    throw Error(ErrorCode::kDecode, "encoded point must start with 04 (uncompressed)");
  }
  return {BigInt::from_hex(hex.substr(2, digits)), BigInt::from_hex(hex.substr(2 + digits))};
}

RawCoordinates display_coordinates(std::string_view text, const CurveParams& curve) {
  text = trim(text);
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') {
    throw Error(ErrorCode::kDecode, "display form must look like (X,Y)");
  }
  const std::string_view inner = text.substr(1, text.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos) throw Error(ErrorCode::kDecode, "missing ',' in (X,Y)");
  const std::string_view xs = trim(inner.substr(0, comma));
  const std::string_view ys = trim(inner.substr(comma + 1));
  const std::size_t max_digits = 2 * curve.coordinate_bytes();
  for (std::string_view c : {xs, ys}) {
    if (c.empty() || c.size() > max_digits || !all_hex(c, true)) {
      throw Error(ErrorCode::kDecode, "malformed coordinate '" + std::string(c) + "'");
    }
  }
  return {BigInt::from_hex(xs), BigInt::from_hex(ys)};
}

}  // namespace

RawCoordinates parse_coordinates(std::string_view text, const CurveParams& curve) {
  const std::string_view t = trim(text);
  return !t.empty() && t.front() == '(' ? display_coordinates(t, curve) : hex_coordinates(t, curve);
}

HashPoint decode_point(std::string_view hex, const CurveRef& curve) {
  const RawCoordinates c = hex_coordinates(hex, *curve);
  return make_trusted_hash_point(checked_affine(curve, c.x, c.y));
}

HashPoint decode_display(std::string_view text, const CurveRef& curve) {
  const RawCoordinates c = display_coordinates(text, *curve);
  return make_trusted_hash_point(checked_affine(curve, c.x, c.y));
}

}  // namespace ecchash
