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

#ifndef ECCHASH_CURVE_H_
#define ECCHASH_CURVE_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecchash/bigint.h"
#include "ecchash/field.h"

namespace ecchash {

// Short-Weierstrass curve y^2 = x^3 + a*x + b over GF(p) with a base point
// of prime order.
struct CurveParams {
  CurveParams(std::string name, int security_strength, const BigInt& p,
              const BigInt& a, const BigInt& b, const BigInt& gx,
              const BigInt& gy, BigInt order);

  std::string name;
  int security_strength;
  FieldRef field;
  FieldElement a;
  FieldElement b;
  FieldElement gx;
  FieldElement gy;
  BigInt order;

  const BigInt& p() const noexcept { return field->modulus(); }
  std::size_t coordinate_bytes() const noexcept { return field->byte_length(); }
};

using CurveRef = std::shared_ptr<const CurveParams>;

// Looks up one of P-192, P-224, P-256, P-384, P-521. Matching ignores case
// and the dash, so "p224" works too. Throws Error(kUnknownCurve).
CurveRef curve_registry(std::string_view name);
// All registered curves in ascending security strength.
std::span<const CurveRef> registered_curves();

// Group element: the identity or an affine pair, tagged with its curve.
// Construction does not validate; the group operations do.
class Point {
 public:
  static Point identity(CurveRef curve);
  static Point affine(CurveRef curve, FieldElement x, FieldElement y);
  static Point affine(CurveRef curve, const BigInt& x, const BigInt& y);

  bool is_identity() const noexcept { return !coords_.has_value(); }
  // Precondition: !is_identity().
  const FieldElement& x() const { return coords_->x; }
  const FieldElement& y() const { return coords_->y; }

  const CurveParams& curve() const noexcept { return *curve_; }
  const CurveRef& curve_ref() const noexcept { return curve_; }
  const std::string& curve_name() const noexcept { return curve_->name; }

  friend bool operator==(const Point& lhs, const Point& rhs) noexcept;

 private:
  struct Coords {
    FieldElement x;
    FieldElement y;
  };

  Point(CurveRef curve, std::optional<Coords> coords)
      : curve_(std::move(curve)), coords_(std::move(coords)) {}

  CurveRef curve_;
  std::optional<Coords> coords_;
};

Point base_point(const CurveRef& curve);

// True for the identity; for an affine point, whether the curve equation
// holds under `params` (coordinates are read as integers mod params.p()).
bool is_on_curve(const Point& pt, const CurveParams& params);
bool is_on_curve(const Point& pt);

Point point_neg(const Point& pt);

// Full group law. Throws Error(kIncompatibleCurves) on a tag mismatch and
// Error(kInvalidPoint) when an operand is off its curve.
Point point_add(const Point& lhs, const Point& rhs);
Point point_double(const Point& pt);

// Left-to-right double-and-add. k must be non-negative.
Point scalar_mul(const BigInt& k, const Point& pt);

// scalar_mul(ks[i], pt) for every i. The double-and-add runs in lockstep
// over the batch, so each doubling or addition step needs one inversion
// for the whole batch rather than one per point.
std::vector<Point> scalar_mul_batch(std::span<const BigInt> ks, const Point& pt);

// Group law without the operand checks, for callers that have already
// validated both points (scalar_mul internals, hash aggregation). Curve tags
// must still match; that is checked.
Point point_add_unchecked(const Point& lhs, const Point& rhs);
Point point_double_unchecked(const Point& pt);

}  // namespace ecchash

#endif  // ECCHASH_CURVE_H_
