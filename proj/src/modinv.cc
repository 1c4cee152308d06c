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

// Lehmer's extended Euclidean algorithm (Knuth, TAOCP vol. 2, 4.5.2,
// algorithm L) specialised to computing a single Bezout cofactor.
//
// Remainders u, v and cofactors su, sv (u == su * a, v == sv * a mod m) live
// in signed radix-2^62 limb arrays: every limb but the top one is in
// [0, 2^62), the top one carries the sign. A 2x2 step matrix with int64
// entries then needs only one signed 64x64 product per limb and entry.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "ecchash/bigint.h"
#include "ecchash/error.h"

namespace ecchash {
namespace {

using SWide = __int128;

constexpr int kDigitBits = 62;
constexpr std::int64_t kDigitMask = (std::int64_t{1} << kDigitBits) - 1;

// Signed radix-2^62 view of a fixed number of limbs.
struct Num {
  std::int64_t* d;
  std::size_t n;
};

void load(Num x, const BigInt& value) {
  const auto limbs = value.limbs();
  for (std::size_t i = 0; i < x.n; ++i) {
    const std::size_t bitpos = i * kDigitBits;
    const std::size_t w = bitpos / 64;
    const unsigned off = static_cast<unsigned>(bitpos % 64);
    std::uint64_t digit = w < limbs.size() ? limbs[w] >> off : 0;
    if (off > 64 - kDigitBits && w + 1 < limbs.size()) digit |= limbs[w + 1] << (64 - off);
    x.d[i] = static_cast<std::int64_t>(digit) & kDigitMask;
  }
}

// Requires x >= 0.
BigInt store(Num x) {
  std::vector<std::uint64_t> out((x.n * kDigitBits + 63) / 64 + 1, 0);
  for (std::size_t i = 0; i < x.n; ++i) {
    const auto digit = static_cast<std::uint64_t>(x.d[i]);
    const std::size_t bitpos = i * kDigitBits;
    out[bitpos / 64] |= digit << (bitpos % 64);
    if (bitpos % 64 > 64 - kDigitBits) out[bitpos / 64 + 1] |= digit >> (64 - bitpos % 64);
  }
  return BigInt::from_limbs(out);
}

bool is_negative(Num x) { return x.d[x.n - 1] < 0; }

std::size_t bit_length(Num x) {
  for (std::size_t i = x.n; i-- > 0;) {
    if (x.d[i] != 0) {
      return i * kDigitBits + 64 -
             static_cast<std::size_t>(std::countl_zero(static_cast<std::uint64_t>(x.d[i])));
    }
  }
  return 0;
}

// 62 bits of non-negative x starting at bit `shift`.
std::int64_t extract_digit(Num x, std::size_t shift) {
  const std::size_t i = shift / kDigitBits;
  const int off = static_cast<int>(shift % kDigitBits);
  std::uint64_t v = static_cast<std::uint64_t>(x.d[i]) >> off;
  if (off != 0 && i + 1 < x.n) v |= static_cast<std::uint64_t>(x.d[i + 1]) << (kDigitBits - off);
  return static_cast<std::int64_t>(v) & kDigitMask;
}

void negate(Num x) {
  std::int64_t carry = 0;
  for (std::size_t i = 0; i + 1 < x.n; ++i) {
    const std::int64_t s = carry - x.d[i];
    x.d[i] = s & kDigitMask;
    carry = s >> kDigitBits;
  }
  x.d[x.n - 1] = carry - x.d[x.n - 1];
}

void load_signed(Num x, const BigInt& value) {
  load(x, value.abs());
  if (value.is_negative()) negate(x);
}

BigInt store_signed(Num x) {
  if (!is_negative(x)) return store(x);
  std::vector<std::int64_t> tmp(x.d, x.d + x.n);
  const Num t{tmp.data(), tmp.size()};
  negate(t);
  return -store(t);
}

bool less(Num x, Num y) {
  for (std::size_t i = x.n; i-- > 0;) {
    if (x.d[i] != y.d[i]) return x.d[i] < y.d[i];
  }
  return false;
}

// Re-normalises a value held in the low `from` limbs to the low `to` limbs.
void widen(std::int64_t* d, std::size_t from, std::size_t to) {
  std::int64_t carry = d[from - 1];
  for (std::size_t i = from - 1; i + 1 < to; ++i) {
    d[i] = carry & kDigitMask;
    carry >>= kDigitBits;
  }
  d[to - 1] = carry;
}

// Drops top limbs of both values while they carry nothing but sign.
std::size_t narrow(std::int64_t* x, std::int64_t* y, std::size_t n) {
  constexpr std::int64_t kBase = std::int64_t{1} << kDigitBits;
  while (n > 1 && (x[n - 1] == 0 || x[n - 1] == -1) && (y[n - 1] == 0 || y[n - 1] == -1)) {
    if (x[n - 1] == -1) x[n - 2] -= kBase;
    if (y[n - 1] == -1) y[n - 2] -= kBase;
    x[n - 1] = y[n - 1] = 0;
    --n;
  }
  return n;
}

// (x, y) <- (a x + b y, c x + d y). The caller guarantees the exact results
// fit in x.n limbs.
void apply(Num x, Num y, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  SWide cx = 0, cy = 0;
  const std::size_t last = x.n - 1;
  for (std::size_t i = 0; i < last; ++i) {
    const SWide xi = x.d[i], yi = y.d[i];
    cx += a * xi + b * yi;
    cy += c * xi + d * yi;
    x.d[i] = static_cast<std::int64_t>(cx & kDigitMask);
    y.d[i] = static_cast<std::int64_t>(cy & kDigitMask);
    cx >>= kDigitBits;
    cy >>= kDigitBits;
  }
  const SWide xi = x.d[last], yi = y.d[last];
  x.d[last] = static_cast<std::int64_t>(cx + a * xi + b * yi);
  y.d[last] = static_cast<std::int64_t>(cy + c * xi + d * yi);
}

// x += m, carrying through the 62-bit limbs.
void add_into(Num x, Num m) {
  std::int64_t carry = 0;
  for (std::size_t i = 0; i + 1 < x.n; ++i) {
    const std::int64_t s = x.d[i] + m.d[i] + carry;
    x.d[i] = s & kDigitMask;
    carry = s >> kDigitBits;
  }
  x.d[x.n - 1] += m.d[x.n - 1] + carry;
}


}  // namespace

BigInt mod_inverse(const BigInt& value, const BigInt& modulus) {
  if (modulus < BigInt(2)) {
    throw Error(ErrorCode::kInvalidModulus, "modulus must be at least 2");
  }
  const bool reduced = !value.is_negative() && value < modulus;
  const BigInt a = reduced ? value : value.mod(modulus);
  if (a.is_zero()) throw Error(ErrorCode::kNonInvertible, "zero has no inverse");

  // One spare limb so signed cofactors never overflow the top limb.
  const std::size_t width = modulus.bit_length() / kDigitBits + 2;
  std::vector<std::int64_t> storage(5 * width);
  Num u{storage.data(), width}, v{u.d + width, width};
  Num su{v.d + width, width}, sv{su.d + width, width}, m{sv.d + width, width};
  load(u, modulus);
  load(m, modulus);
  load(v, a);
  sv.d[0] = 1;
  // Cofactors start tiny and grow; they live in their low `cn` limbs and
  // are widened to full width only when needed.
  std::size_t cn = 1;
  auto cof_full = [&] {
    widen(su.d, cn, width);
    widen(sv.d, cn, width);
    cn = width;
  };

  bool stalled = false;
  for (;;) {
    const std::size_t ub = bit_length(u);
    if (bit_length(v) == 0) break;
    // u and v only shrink, so they can be processed on their active limbs.
    const std::size_t active = std::min(width, ub / kDigitBits + 1);
    const Num ua{u.d, active}, va{v.d, active};

    if (ub <= kDigitBits) {
      // Both remainders fit one digit: finish exactly.
      std::int64_t uu = u.d[0], vv = v.d[0];
      std::int64_t A = 1, B = 0, C = 0, D = 1;
      while (vv != 0) {
        const std::int64_t q = uu / vv;
        const std::int64_t r = uu - q * vv;
        const std::int64_t nc = A - q * C;
        const std::int64_t nd = B - q * D;
        A = C;
        B = D;
        C = nc;
        D = nd;
        uu = vv;
        vv = r;
      }
      cof_full();
      apply(su, sv, A, B, C, D);
      u.d[0] = uu;
      v.d[0] = 0;
      break;
    }

    const std::size_t shift = ub - kDigitBits;
    std::int64_t uh = extract_digit(ua, shift);
    std::int64_t vh = extract_digit(va, shift);
    // Euclid on the leading digits while the remainder still dominates the
    // cofactor. |C| <= |D| <= uh0 / uh (continuant bound), so q * D never
    // overflows. The last quotient or two may be off; the fix-up after the
    // step absorbs that.
    std::int64_t A = 1, B = 0, C = 0, D = 1;
    while (vh != 0) {
      const std::int64_t q = uh / vh;
      const std::int64_t r = uh - q * vh;
      const std::int64_t nd = B - q * D;
      if (r < (nd < 0 ? -nd : nd)) break;
      const std::int64_t nc = A - q * C;
      A = C;
      B = D;
      C = nc;
      D = nd;
      uh = vh;
      vh = r;
    }

    if (B == 0 || stalled) {
      // Quotient too large for the single-precision simulation, or the
      // previous step made no headway.
      stalled = false;
      cof_full();
      BigInt q, r;
      BigInt::divmod(store(ua), store(va), q, r);
      const BigInt next = store_signed(su) - q * store_signed(sv);
      std::swap(u.d, v.d);
      load(v, r);
      std::swap(su.d, sv.d);
      load_signed(sv, next);
      cn = narrow(su.d, sv.d, width);
    } else {
      const std::size_t grown = std::min(width, cn + 2);
      widen(su.d, cn, grown);
      widen(sv.d, cn, grown);
      cn = grown;
      const Num sa{su.d, cn}, sb{sv.d, cn};
      apply(ua, va, A, B, C, D);
      apply(sa, sb, A, B, C, D);
      // The step matrix is unimodular, so a bad quotient only costs order.
      if (is_negative(ua)) {
        negate(ua);
        negate(sa);
      }
      if (is_negative(va)) {
        negate(va);
        negate(sb);
      }
      if (less(ua, va)) {
        std::swap(u.d, v.d);
        std::swap(su.d, sv.d);
      }
      stalled = bit_length(u) >= ub;
      cn = narrow(su.d, sv.d, cn);
    }
  }
  cof_full();

  if (bit_length(u) != 1) {
    throw Error(ErrorCode::kNonInvertible, "element shares a factor with the modulus");
  }
  if (is_negative(su)) add_into(su, m);
  return store(su);
}

}  // namespace ecchash
