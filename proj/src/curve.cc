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

#include "ecchash/curve.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "ecchash/error.h"

namespace ecchash {
namespace {

struct CurveConstants {
  const char* name;
  int security_strength;
  const char* p;
  const char* a;
  const char* b;
  const char* gx;
  const char* gy;
  const char* order;
};

// Domain parameters from NIST SP 800-186, in decimal. Each
// curve has a = p - 3. The strength-to-curve pairing follows SP 800-57
// Part 1: 80 -> P-192, 112 -> P-224, 128 -> P-256, 192 -> P-384,
// 256 -> P-521.
constexpr std::array<CurveConstants, 5> kCurves = {{
    {"P-192", 80,
     "6277101735386680763835789423207666416083908700390324961279",
     "6277101735386680763835789423207666416083908700390324961276",
     "2455155546008943817740293915197451784769108058161191238065",
     "602046282375688656758213480587526111916698976636884684818",
     "174050332293622031404857552280219410364023488927386650641",
     "6277101735386680763835789423176059013767194773182842284081"},
    {"P-224", 112,
     "26959946667150639794667015087019630673557916260026308143510066298881",
     "26959946667150639794667015087019630673557916260026308143510066298878",
     "18958286285566608000408668544493926415504680968679321075787234672564",
     "19277929113566293071110308034699488026831934219452440156649784352033",
     "19926808758034470970197974370888749184205991990603949537637343198772",
     "26959946667150639794667015087019625940457807714424391721682722368061"},
    {"P-256", 128,
     "115792089210356248762697446949407573530086143415290314195533631308867097853951",
     "115792089210356248762697446949407573530086143415290314195533631308867097853948",
     "41058363725152142129326129780047268409114441015993725554835256314039467401291",
     "48439561293906451759052585252797914202762949526041747995844080717082404635286",
     "36134250956749795798585127919587881956611106672985015071877198253568414405109",
     "115792089210356248762697446949407573529996955224135760342422259061068512044369"},
    {"P-384", 192,
     "394020061963944792122790401001436138050797392704654466679482934042457217714968"
     "70329047266088258938001861606973112319",
     "394020061963944792122790401001436138050797392704654466679482934042457217714968"
     "70329047266088258938001861606973112316",
     "275801935599597058778490118403890480930569058563615685214287073019886892413098"
     "60865136260764883745107765439761230575",
     "262470350957996892686231567445669818918529234911092133878156159009255188547380"
     "50089022388053975719786650872476732087",
     "832571096148902998554675128952010817928785304886131559470920590248050319988441"
     "9224438643760392947333078086511627871",
     "394020061963944792122790401001436138050797392704654466679469052796276593991132"
     "63569398956308152294913554433653942643"},
    {"P-521", 256,
     "686479766013060971498190079908139321726943530014330540939446345918554318339765"
     "605212255964066145455497729631139148085803712198799971664381257402829111505715"
     "1",
     "686479766013060971498190079908139321726943530014330540939446345918554318339765"
     "605212255964066145455497729631139148085803712198799971664381257402829111505714"
     "8",
     "109384903807373427451111239076680556993620759895168374899458639449595311615073"
     "501601370873757375962324859213229670631330943845253159101291214232748847898598"
     "4",
     "266174080205021706322876871672336096072985916875697314770667136841880294499642"
     "780849154508062777190235209424122506555866215711354557091681416163731589599984"
     "6",
     "375718002577002046354550722449118360359445513476976248669456777961554447744055"
     "631669123440501294553956214444453728942852258566672919658081012434427757837678"
     "4",
     "686479766013060971498190079908139321726943530014330540939446345918554318339765"
     "539424505774633321719753296399637136332111386476861244038034037280889270700544"
     "9"},
}};

std::string canonical_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

const std::array<CurveRef, 5>& registry() {
  static const std::array<CurveRef, 5> curves = [] {
    std::array<CurveRef, 5> out;
    for (std::size_t i = 0; i < kCurves.size(); ++i) {
      const CurveConstants& c = kCurves[i];
      out[i] = std::make_shared<const CurveParams>(
          c.name, c.security_strength, BigInt::from_decimal(c.p), BigInt::from_decimal(c.a),
          BigInt::from_decimal(c.b), BigInt::from_decimal(c.gx), BigInt::from_decimal(c.gy),
          BigInt::from_decimal(c.order));
    }
    return out;
  }();
  return curves;
}

void require_same_curve(const Point& lhs, const Point& rhs) {
  if (lhs.curve_ref() != rhs.curve_ref() && lhs.curve_name() != rhs.curve_name()) {
    throw Error(ErrorCode::kIncompatibleCurves,
                "cannot combine points on " + lhs.curve_name() + " and " + rhs.curve_name());
  }
}

void require_on_curve(const Point& pt) {
  if (!is_on_curve(pt)) {
    throw Error(ErrorCode::kInvalidPoint, "point is not on " + pt.curve_name());
  }
}

}  // namespace

CurveParams::CurveParams(std::string name_in, int strength, const BigInt& p_in,
                         const BigInt& a_in, const BigInt& b_in, const BigInt& gx_in,
                         const BigInt& gy_in, BigInt order_in)
    : name(std::move(name_in)),
      security_strength(strength),
      field(PrimeField::create(p_in)),
      a(a_in, field),
      b(b_in, field),
      gx(gx_in, field),
      gy(gy_in, field),
      order(std::move(order_in)) {}

CurveRef curve_registry(std::string_view name) {
  const std::string wanted = canonical_name(name);
  for (const CurveRef& curve : registry()) {
    if (canonical_name(curve->name) == wanted) return curve;
  }
  throw Error(ErrorCode::kUnknownCurve, "unknown curve '" + std::string(name) + "'");
}

std::span<const CurveRef> registered_curves() { return registry(); }

Point Point::identity(CurveRef curve) { return Point(std::move(curve), std::nullopt); }

Point Point::affine(CurveRef curve, FieldElement x, FieldElement y) {
  return Point(std::move(curve), Coords{std::move(x), std::move(y)});
}

Point Point::affine(CurveRef curve, const BigInt& x, const BigInt& y) {
  FieldElement fx(x, curve->field);
  FieldElement fy(y, curve->field);
  return affine(std::move(curve), std::move(fx), std::move(fy));
}

bool operator==(const Point& lhs, const Point& rhs) noexcept {
  if (lhs.curve_name() != rhs.curve_name()) return false;
  if (lhs.is_identity() || rhs.is_identity()) return lhs.is_identity() == rhs.is_identity();
  return lhs.x() == rhs.x() && lhs.y() == rhs.y();
}

Point base_point(const CurveRef& curve) { return Point::affine(curve, curve->gx, curve->gy); }

bool is_on_curve(const Point& pt, const CurveParams& params) {
  if (pt.is_identity()) return true;
  const BigInt& p = params.p();
  if (pt.x().value() >= p || pt.y().value() >= p) return false;
  const FieldElement x(pt.x().value(), params.field);
  const FieldElement y(pt.y().value(), params.field);
  const FieldElement rhs = (x.square() + params.a) * x + params.b;
  return y.square() == rhs;
}

bool is_on_curve(const Point& pt) { return is_on_curve(pt, pt.curve()); }

Point point_neg(const Point& pt) {
  if (pt.is_identity()) return pt;
  return Point::affine(pt.curve_ref(), pt.x(), -pt.y());
}

Point point_add_unchecked(const Point& lhs, const Point& rhs) {
  require_same_curve(lhs, rhs);
  if (lhs.is_identity()) return rhs;
  if (rhs.is_identity()) return lhs;
  const FieldElement& x1 = lhs.x();
  const FieldElement& y1 = lhs.y();
  const FieldElement& x2 = rhs.x();
  const FieldElement& y2 = rhs.y();
  if (x1 == x2) {
    if ((y1 + y2).is_zero()) return Point::identity(lhs.curve_ref());
    return point_double_unchecked(lhs);
  }
  const FieldElement slope = (y2 - y1) * (x2 - x1).inverse();
  FieldElement x3 = slope.square() - x1 - x2;
  FieldElement y3 = slope * (x1 - x3) - y1;
  return Point::affine(lhs.curve_ref(), std::move(x3), std::move(y3));
}

Point point_double_unchecked(const Point& pt) {
  if (pt.is_identity()) return pt;
  const FieldElement& x1 = pt.x();
  const FieldElement& y1 = pt.y();
  if (y1.is_zero()) return Point::identity(pt.curve_ref());
  const FieldElement xx = x1.square();
  const FieldElement slope = (xx + xx + xx + pt.curve().a) * (y1 + y1).inverse();
  FieldElement x3 = slope.square() - x1 - x1;
  FieldElement y3 = slope * (x1 - x3) - y1;
  return Point::affine(pt.curve_ref(), std::move(x3), std::move(y3));
}

Point point_add(const Point& lhs, const Point& rhs) {
  require_same_curve(lhs, rhs);
  require_on_curve(lhs);
  require_on_curve(rhs);
  return point_add_unchecked(lhs, rhs);
}

Point point_double(const Point& pt) {
  require_on_curve(pt);
  return point_double_unchecked(pt);
}

Point scalar_mul(const BigInt& k, const Point& pt) {
  if (k.is_negative()) {
    throw Error(ErrorCode::kInvalidArgument, "scalar must be non-negative");
  }
  require_on_curve(pt);
  if (k.is_zero() || pt.is_identity()) return Point::identity(pt.curve_ref());
  Point acc = pt;
  for (std::size_t i = k.bit_length() - 1; i-- > 0;) {
    acc = point_double_unchecked(acc);
    if (k.bit(i)) acc = point_add_unchecked(acc, pt);
  }
  return acc;
}

std::vector<Point> scalar_mul_batch(std::span<const BigInt> ks, const Point& pt) {
  for (const auto& k : ks) {
    if (k.is_negative()) throw Error(ErrorCode::kInvalidArgument, "scalar must be non-negative");
  }
  require_on_curve(pt);
  const CurveRef& curve = pt.curve_ref();
  const std::size_t n = ks.size();
  std::vector<Point> out;
  out.reserve(n);
  if (pt.is_identity()) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(Point::identity(curve));
    return out;
  }
  std::size_t top = 0;
  for (const auto& k : ks) top = std::max(top, k.bit_length());

  const FieldElement& gx = pt.x();
  const FieldElement& gy = pt.y();
  const FieldElement& a = pt.curve().a;
  // Accumulators as bare coordinates; live[i] == 0 marks the identity.
  std::vector<FieldElement> xs(n, gx), ys(n, gy);
  std::vector<char> live(n, 0);
  std::vector<std::size_t> idx;
  std::vector<FieldElement> inv;
  idx.reserve(n);
  inv.reserve(n);

  for (std::size_t bit = top; bit-- > 0;) {
    idx.clear();
    inv.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!live[i]) continue;
      if (ys[i].is_zero()) {
        live[i] = 0;
      } else {
        idx.push_back(i);
        inv.push_back(ys[i] + ys[i]);
      }
    }
    batch_inverse(inv);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      FieldElement& x = xs[idx[j]];
      FieldElement& y = ys[idx[j]];
      const FieldElement xx = x.square();
      const FieldElement slope = (xx + xx + xx + a) * inv[j];
      FieldElement x3 = slope.square() - x - x;
      y = slope * (x - x3) - y;
      x = std::move(x3);
    }

    idx.clear();
    inv.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!ks[i].bit(bit)) continue;
      if (!live[i]) {
        xs[i] = gx;
        ys[i] = gy;
        live[i] = 1;
      } else if (xs[i] == gx) {
        // acc is +-pt: doubling or cancellation, both rare.
        const Point sum = point_add_unchecked(Point::affine(curve, xs[i], ys[i]), pt);
        live[i] = !sum.is_identity();
        if (live[i]) {
          xs[i] = sum.x();
          ys[i] = sum.y();
        }
      } else {
        idx.push_back(i);
        inv.push_back(gx - xs[i]);
      }
    }
    batch_inverse(inv);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      FieldElement& x = xs[idx[j]];
      FieldElement& y = ys[idx[j]];
      const FieldElement slope = (gy - y) * inv[j];
      FieldElement x3 = slope.square() - x - gx;
      y = slope * (x - x3) - y;
      x = std::move(x3);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(live[i] ? Point::affine(curve, std::move(xs[i]), std::move(ys[i]))
                          : Point::identity(curve));
  }
  return out;
}

}  // namespace ecchash
