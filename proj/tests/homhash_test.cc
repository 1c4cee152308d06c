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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "ecchash/error.h"
#include "ecchash/vectors.h"
#include "test_util.h"

namespace ecchash {
namespace {

using testing::code_of;
using testing::random_scalar;

CurveRef p224() { return curve_registry("P-224"); }

PlaintextRecord rec(const BigInt& v) { return PlaintextRecord{v}; }

std::vector<PlaintextRecord> example_records() {
  std::vector<PlaintextRecord> out;
  for (auto t : vectors::kRecords) out.push_back(PlaintextRecord::parse(t));
  return out;
}

TEST(PlaintextRecordTest, ParsesDecimalAndHex) {
  EXPECT_EQ(PlaintextRecord::parse("0x0CDD5C").value, BigInt(0x0CDD5C));
  EXPECT_EQ(PlaintextRecord::parse("0X0cdd5c").value, BigInt(0x0CDD5C));
  EXPECT_EQ(PlaintextRecord::parse("843100").value, BigInt(843100));
  EXPECT_EQ(code_of([] { PlaintextRecord::parse("-5"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { PlaintextRecord::parse("-0x5"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { PlaintextRecord::parse("12z"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { PlaintextRecord::parse(""); }), ErrorCode::kParse);
}

TEST(PlaintextRecordTest, BytesAreBigEndian) {
  const std::uint8_t bytes[] = {0x0C, 0xDD, 0x5C};
  EXPECT_EQ(PlaintextRecord::from_bytes(bytes).value, BigInt(0x0CDD5C));
  EXPECT_TRUE(PlaintextRecord::from_bytes({}).value.is_zero());
}

TEST(PlaintextRecordTest, ParseRecordsSkipsBlanksAndNamesBadLine) {
  std::istringstream ok(" 0x10 \n\n17\r\n\t\n");
  const auto rs = parse_records(ok);
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs[0].value, BigInt(16));
  EXPECT_EQ(rs[1].value, BigInt(17));

  std::istringstream bad("1\n2\n\nbogus\n");
  try {
    parse_records(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
  std::istringstream empty("");
  EXPECT_TRUE(parse_records(empty).empty());
}

TEST(HashRecordTest, WorkedExampleCoordinatesExact) {
  const auto records = example_records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const HashPoint h = hash_record(records[i], p224());
    EXPECT_EQ(h.x().to_hex(true), vectors::kHashes[i].x) << i;
    EXPECT_EQ(h.y().to_hex(true), vectors::kHashes[i].y) << i;
  }
}

TEST(HashRecordTest, OneHashesToBasePoint) {
  for (const auto& c : registered_curves()) {
    EXPECT_EQ(hash_record(rec(1), c).point(), base_point(c)) << c->name;
  }
}

TEST(HashRecordTest, ZeroEquivalentScalarsAreDegenerate) {
  const CurveRef c = p224();
  EXPECT_EQ(code_of([&] { hash_record(rec(0), c); }), ErrorCode::kDegenerateRecord);
  EXPECT_EQ(code_of([&] { hash_record(rec(c->order), c); }), ErrorCode::kDegenerateRecord);
  EXPECT_EQ(code_of([&] { hash_record(rec(c->order * BigInt(7)), c); }),
            ErrorCode::kDegenerateRecord);
}

TEST(HashRecordTest, CongruentRecordsCollide) {
  std::mt19937_64 rng(11);
  for (const auto& c : registered_curves()) {
    const BigInt v = random_scalar(rng, c->order);
    EXPECT_EQ(hash_record(rec(v), c), hash_record(rec(v + c->order), c)) << c->name;
    EXPECT_EQ(hash_record(rec(v), c), hash_record(rec(v), c));
  }
}

// Low-entropy inputs are recoverable: walking k*G finds this 12-bit record.
TEST(HashRecordTest, SmallPlaintextIsRecoverableByExhaustiveSearch) {
  const CurveRef c = p224();
  const HashPoint target = hash_record(rec(0xA5C), c);
  Point walk = base_point(c);
  std::int64_t found = 0;
  for (std::int64_t k = 1; k < 4096; ++k) {
    if (walk == target.point()) {
      found = k;
      break;
    }
    walk = point_add(walk, base_point(c));
  }
  EXPECT_EQ(found, 0xA5C);
}

TEST(AggregateTest, WorkedExampleSum) {
  const auto records = example_records();
  std::vector<HashPoint> hashes;
  for (const auto& r : records) hashes.push_back(hash_record(r, p224()));
  const HashPoint sum = aggregate(hashes);
  EXPECT_EQ(sum.x().to_hex(true), vectors::kSum.x);
  EXPECT_EQ(sum.y().to_hex(true), vectors::kSum.y);
  EXPECT_EQ(sum, hash_of_sum(records, p224()));
  EXPECT_TRUE(verify_homomorphism(records, sum, p224()));
  EXPECT_FALSE(verify_homomorphism(records, hashes[0], p224()));
}

// The typeset strings differ from the computed values only by the
// transcription slips documented next to them.
TEST(AggregateTest, TypesetArtifactsAreSingleCharacterSlips) {
  std::string sum_y(vectors::kPrintedSumY);
  std::replace(sum_y.begin(), sum_y.end(), 'O', '0');
  EXPECT_EQ(sum_y, vectors::kSum.y);

  const std::string printed(vectors::kPrintedHash1Y);
  ASSERT_EQ(printed.size(), vectors::kHashes[0].y.size() + 1);
  int explanations = 0;
  for (std::size_t i = 0; i < printed.size(); ++i) {
    std::string t = printed;
    t.erase(i, 1);
    if (t == vectors::kHashes[0].y) ++explanations;
  }
  EXPECT_GT(explanations, 0);
}

TEST(AggregateTest, SingleAndPermuted) {
  std::mt19937_64 rng(12);
  for (const auto& c : registered_curves()) {
    std::vector<HashPoint> hs;
    for (int i = 0; i < 6; ++i) hs.push_back(hash_record(rec(random_scalar(rng, c->order)), c));
    EXPECT_EQ(aggregate(std::span(hs).first(1)), hs[0]);
    const HashPoint sum = aggregate(hs);
    for (int round = 0; round < 4; ++round) {
      std::shuffle(hs.begin(), hs.end(), rng);
      EXPECT_EQ(aggregate(hs), sum) << c->name;
    }
  }
}

TEST(AggregateTest, Errors) {
  const CurveRef c = p224();
  EXPECT_EQ(code_of([] { aggregate({}); }), ErrorCode::kEmptyAggregate);
  const std::vector<HashPoint> mixed = {hash_record(rec(5), c),
                                        hash_record(rec(5), curve_registry("P-256"))};
  EXPECT_EQ(code_of([&] { aggregate(mixed); }), ErrorCode::kIncompatibleCurves);
  const std::vector<HashPoint> cancel = {hash_record(rec(5), c),
                                         hash_record(rec(c->order - BigInt(5)), c)};
  EXPECT_EQ(code_of([&] { aggregate(cancel); }), ErrorCode::kDegenerateAggregate);
  // An intermediate identity is fine as long as the total is not.
  std::vector<HashPoint> through = cancel;
  through.push_back(hash_record(rec(9), c));
  EXPECT_EQ(aggregate(through), hash_record(rec(9), c));
}

TEST(HashOfSumTest, WrapsModuloOrder) {
  for (const auto& c : registered_curves()) {
    const BigInt k(123456789);
    const std::vector<PlaintextRecord> rs = {rec(k), rec(c->order - k + BigInt(1))};
    EXPECT_EQ(hash_of_sum(rs, c).point(), base_point(c)) << c->name;
    const std::vector<PlaintextRecord> one = {rec(k)};
    EXPECT_EQ(hash_of_sum(one, c), hash_record(rec(k), c));
    const std::vector<PlaintextRecord> zero = {rec(k), rec(c->order - k)};
    EXPECT_EQ(code_of([&] { hash_of_sum(zero, c); }), ErrorCode::kDegenerateRecord);
  }
  EXPECT_EQ(code_of([] { hash_of_sum({}, p224()); }), ErrorCode::kDegenerateRecord);
}

TEST(VerifyTest, EdgeCases) {
  const CurveRef c = p224();
  const std::vector<PlaintextRecord> one = {rec(77)};
  EXPECT_TRUE(verify_homomorphism(one, hash_record(rec(77), c), c));
  EXPECT_FALSE(verify_homomorphism(one, hash_record(rec(77), curve_registry("P-256")), c));
  EXPECT_EQ(code_of([&] { verify_homomorphism({}, hash_record(rec(77), c), c); }),
            ErrorCode::kEmptyAggregate);
}

TEST(HomomorphismTest, SmallRandomSetsAllCurves) {
  std::mt19937_64 rng(13);
  for (const auto& c : registered_curves()) {
    for (int size : {1, 2, 7}) {
      std::vector<PlaintextRecord> rs;
      std::vector<HashPoint> hs;
      for (int i = 0; i < size; ++i) {
        rs.push_back(rec(random_scalar(rng, c->order)));
        hs.push_back(hash_record(rs.back(), c));
      }
      EXPECT_EQ(aggregate(hs), hash_of_sum(rs, c)) << c->name << " size " << size;
    }
  }
}

TEST(EncodingTest, FixedLengthLowercaseRoundTrip) {
  std::mt19937_64 rng(14);
  const std::size_t bytes[] = {24, 28, 32, 48, 66};
  std::size_t i = 0;
  for (const auto& c : registered_curves()) {
    EXPECT_EQ(c->coordinate_bytes(), bytes[i++]);
    for (int t = 0; t < 20; ++t) {
      const HashPoint h = hash_record(rec(random_scalar(rng, c->order)), c);
      const std::string enc = encode_point(h);
      EXPECT_EQ(enc.size(), 2 + 4 * c->coordinate_bytes());
      EXPECT_EQ(enc.substr(0, 2), "04");
      EXPECT_TRUE(std::none_of(enc.begin(), enc.end(), [](char ch) { return ch >= 'A' && ch <= 'F'; }));
      EXPECT_TRUE(is_canonical_encoding(enc, *c));
      EXPECT_EQ(decode_point(enc, c), h);
      EXPECT_EQ(decode_display(encode_display(h), c), h);
    }
  }
}

TEST(EncodingTest, P224IsFiftySevenBytes) {
  const HashPoint h = hash_record(rec(1), p224());
  EXPECT_EQ(encode_point(h).size(), 2u * 57);
}

TEST(EncodingTest, SmallCoordinatesArePadded) {
  // P-521 coordinates usually have leading zero bytes in 66-byte form.
  const CurveRef c = curve_registry("P-521");
  const HashPoint g = hash_record(rec(1), c);
  const std::string enc = encode_point(g);
  EXPECT_EQ(enc.substr(2, 4), "00c6");
  EXPECT_EQ(decode_point(enc, c), g);
}

TEST(EncodingTest, DisplayTupleOfWorkedExample) {
  const std::string text = "(" + std::string(vectors::kHashes[0].x) + "," +
                           std::string(vectors::kHashes[0].y) + ")";
  const HashPoint h = hash_record(PlaintextRecord::parse(vectors::kRecords[0]), p224());
  EXPECT_EQ(encode_display(h), text);
  EXPECT_EQ(decode_display(text, p224()), h);
  EXPECT_EQ(decode_display(" ( " + std::string(vectors::kHashes[0].x) + " , " +
                               std::string(vectors::kHashes[0].y) + " ) ",
                           p224()),
            h);
}

TEST(EncodingTest, DecodeRejectsMalformed) {
  const CurveRef c = p224();
  const std::string good = encode_point(hash_record(rec(12345), c));
  auto mutate = [&](std::size_t at, char ch) {
    std::string s = good;
    s[at] = ch;
    return s;
  };
  EXPECT_EQ(code_of([&] { decode_point(good.substr(1), c); }), ErrorCode::kDecode);
  EXPECT_EQ(code_of([&] { decode_point(good + "0", c); }), ErrorCode::kDecode);
  EXPECT_EQ(code_of([&] { decode_point(mutate(10, 'g'), c); }), ErrorCode::kDecode);
  EXPECT_EQ(code_of([&] { decode_point(mutate(1, '3'), c); }), ErrorCode::kDecode);
  // Off-curve: flip the last digit of y.
  const char last = good.back() == '0' ? '1' : '0';
  EXPECT_EQ(code_of([&] { decode_point(mutate(good.size() - 1, last), c); }), ErrorCode::kDecode);
  // x >= p.
  const std::string big_x = "04" + std::string(56, 'f') + good.substr(58);
  EXPECT_EQ(code_of([&] { decode_point(big_x, c); }), ErrorCode::kDecode);
  EXPECT_EQ(code_of([&] { decode_point(good, curve_registry("P-256")); }), ErrorCode::kDecode);
  for (const char* bad : {"", "()", "(1)", "(1,)", "(,1)", "(1,2", "1,2)", "(1,2)", "(xy,1)"}) {
    EXPECT_EQ(code_of([&] { decode_display(bad, c); }), ErrorCode::kDecode) << bad;
  }
}

TEST(EncodingTest, ParseCoordinatesHandlesBothForms) {
  const CurveRef c = p224();
  const HashPoint h = hash_record(rec(99), c);
  const RawCoordinates a = parse_coordinates(encode_point(h), *c);
  const RawCoordinates b = parse_coordinates(encode_display(h), *c);
  EXPECT_EQ(a.x, h.x());
  EXPECT_EQ(a.y, h.y());
  EXPECT_EQ(b.x, h.x());
  EXPECT_EQ(b.y, h.y());
  // Shape only: an off-curve pair still parses.
  const RawCoordinates off = parse_coordinates("(1,2)", *c);
  EXPECT_EQ(off.x, BigInt(1));
}

TEST(HashPointTest, FromPointValidates) {
  const CurveRef c = p224();
  EXPECT_EQ(code_of([&] { HashPoint::from_point(Point::identity(c)); }),
            ErrorCode::kDegenerateAggregate);
  EXPECT_EQ(code_of([&] { HashPoint::from_point(Point::affine(c, BigInt(1), BigInt(2))); }),
            ErrorCode::kInvalidPoint);
  EXPECT_EQ(HashPoint::from_point(base_point(c)), hash_record(rec(1), c));
}

}  // namespace
}  // namespace ecchash
