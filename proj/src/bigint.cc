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

#include "ecchash/bigint.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <ostream>

#include "ecchash/error.h"
#include "limbs.h"

namespace ecchash {
namespace detail {

void trim(LimbBuffer& limbs) noexcept {
  while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
}

int compare_mag(std::span<const Limb> a, std::span<const Limb> b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

LimbBuffer add_mag(std::span<const Limb> a, std::span<const Limb> b) {
  if (a.size() < b.size()) std::swap(a, b);
  LimbBuffer out(a.size() + 1);
  Limb carry = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Wide s = static_cast<Wide>(a[i]) + (i < b.size() ? b[i] : 0) + carry;
    out[i] = static_cast<Limb>(s);
    carry = static_cast<Limb>(s >> 64);
  }
  out[a.size()] = carry;
  trim(out);
  return out;
}

LimbBuffer sub_mag(std::span<const Limb> a, std::span<const Limb> b) {
  LimbBuffer out(a.size());
  Limb borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Limb bi = i < b.size() ? b[i] : 0;
    Wide d = static_cast<Wide>(a[i]) - bi - borrow;
    out[i] = static_cast<Limb>(d);
    borrow = static_cast<Limb>(d >> 64) != 0 ? 1 : 0;
  }
  trim(out);
  return out;
}

void mul_into(std::span<const Limb> a, std::span<const Limb> b, Limb* __restrict out) noexcept {
  std::fill(out, out + a.size() + b.size(), Limb{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    Limb carry = 0;
    const Limb ai = a[i];
    Limb* row = out + i;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Wide t = static_cast<Wide>(ai) * b[j];
      Limb lo = static_cast<Limb>(t);
      Limb hi = static_cast<Limb>(t >> 64);
      lo += carry;
      hi += lo < carry;
      lo += row[j];
      hi += lo < row[j];
      row[j] = lo;
      carry = hi;
    }
    row[b.size()] = carry;
  }
}

LimbBuffer mul_mag(std::span<const Limb> a, std::span<const Limb> b) {
  if (a.empty() || b.empty()) return {};
  LimbBuffer out(a.size() + b.size());
  mul_into(a, b, out.data());
  trim(out);
  return out;
}

namespace {

// floor((2^128 - 1) / d) - 2^64 for normalised d (Moller and Granlund).
Limb reciprocal(Limb d) {
  return static_cast<Limb>(~Wide{0} / d);
}

// (u1 b + u0) / d with u1 < d, using the precomputed reciprocal.
void div2by1(Limb u1, Limb u0, Limb d, Limb v, Limb& q, Limb& r) {
  Wide qq = static_cast<Wide>(v) * u1;
  qq += (static_cast<Wide>(u1 + 1) << 64) | u0;
  Limb q1 = static_cast<Limb>(qq >> 64);
  const Limb q0 = static_cast<Limb>(qq);
  Limb rem = u0 - q1 * d;
  if (rem > q0) {
    --q1;
    rem += d;
  }
  if (rem >= d) {
    ++q1;
    rem -= d;
  }
  q = q1;
  r = rem;
}

// un[0, n) -= q * vn[0, n); returns the limb still to subtract above.
Limb submul(Limb* __restrict un, const Limb* __restrict vn, std::size_t n, Limb q) noexcept {
  Limb k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Wide p = static_cast<Wide>(q) * vn[i];
    Limb lo = static_cast<Limb>(p);
    Limb hi = static_cast<Limb>(p >> 64);
    lo += k;
    hi += lo < k;
    const Limb t = un[i];
    un[i] = t - lo;
    k = hi + (t < lo);
  }
  return k;
}

}  // namespace

void divmod_mag(std::span<const Limb> u, std::span<const Limb> v,
                LimbBuffer* quotient, LimbBuffer* remainder) {
  if (compare_mag(u, v) < 0) {
    if (quotient) quotient->clear();
    if (remainder) remainder->assign(u.data(), u.data() + u.size());
    return;
  }
  const std::size_t n = v.size();
  const std::size_t m = u.size() - n;

  if (n == 1) {
    LimbBuffer q(u.size());
    Wide rem = 0;
    for (std::size_t i = u.size(); i-- > 0;) {
      Wide cur = (rem << 64) | u[i];
      q[i] = static_cast<Limb>(cur / v[0]);
      rem = cur % v[0];
    }
    if (quotient) {
      trim(q);
      *quotient = std::move(q);
    }
    if (remainder) {
      remainder->clear();
      if (rem != 0) remainder->push_back(static_cast<Limb>(rem));
    }
    return;
  }

  const int s = std::countl_zero(v[n - 1]);
  // Field-sized operands fit the stack buffer; bigger ones fall back to heap.
  constexpr std::size_t kStackLimbs = 96;
  Limb stack[kStackLimbs];
  LimbBuffer heap;
  const std::size_t need = n + (u.size() + 1) + (m + 1);
  Limb* scratch = stack;
  if (need > kStackLimbs) {
    heap.resize(need);
    scratch = heap.data();
  }
  Limb* vn = scratch;
  Limb* un = vn + n;
  Limb* q = un + u.size() + 1;
  std::fill(q, q + m + 1, Limb{0});
  if (s == 0) {
    std::copy(v.begin(), v.end(), vn);
    std::copy(u.begin(), u.end(), un);
    un[u.size()] = 0;
  } else {
    for (std::size_t i = n - 1; i > 0; --i) {
      vn[i] = (v[i] << s) | (v[i - 1] >> (64 - s));
    }
    vn[0] = v[0] << s;
    un[u.size()] = u[u.size() - 1] >> (64 - s);
    for (std::size_t i = u.size() - 1; i > 0; --i) {
      un[i] = (u[i] << s) | (u[i - 1] >> (64 - s));
    }
    un[0] = u[0] << s;
  }

  const Limb vtop = vn[n - 1];
  const Limb vnext = vn[n - 2];
  const Limb vinv = reciprocal(vtop);
  for (std::size_t j = m + 1; j-- > 0;) {
    const Limb u2 = un[j + n], u1 = un[j + n - 1], u0 = un[j + n - 2];
    Limb qhat, rhat;
    bool rhat_big = false;
    if (u2 >= vtop) {
      // The true digit is at most b - 1; Knuth's clamp.
      qhat = ~Limb{0};
      const Wide r = static_cast<Wide>(u1) + vtop;
      rhat = static_cast<Limb>(r);
      rhat_big = (r >> 64) != 0;
    } else {
      div2by1(u2, u1, vtop, vinv, qhat, rhat);
    }
    while (!rhat_big &&
           static_cast<Wide>(qhat) * vnext > ((static_cast<Wide>(rhat) << 64) | u0)) {
      --qhat;
      const Wide r = static_cast<Wide>(rhat) + vtop;
      rhat = static_cast<Limb>(r);
      rhat_big = (r >> 64) != 0;
    }

    const Limb k = submul(un + j, vn, n, qhat);
    const Limb top = un[j + n];
    un[j + n] = top - k;

    if (top < k) {
      --qhat;
      Limb c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        Wide t = static_cast<Wide>(un[i + j]) + vn[i] + c;
        un[i + j] = static_cast<Limb>(t);
        c = static_cast<Limb>(t >> 64);
      }
      un[j + n] += c;
    }
    q[j] = static_cast<Limb>(qhat);
  }

  if (quotient) {
    quotient->assign(q, q + m + 1);
    trim(*quotient);
  }
  if (remainder) {
    LimbBuffer r(n);
    if (s == 0) {
      std::copy(un, un + n, r.begin());
    } else {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        r[i] = (un[i] >> s) | (un[i + 1] << (64 - s));
      }
      r[n - 1] = un[n - 1] >> s;
    }
    trim(r);
    *remainder = std::move(r);
  }
}

}  // namespace detail

namespace {

using detail::Limb;
using detail::Wide;

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// mag = mag * mul + add, in place.
void mul_add_small(LimbBuffer& mag, Limb mul, Limb add) {
  Limb carry = add;
  for (Limb& limb : mag) {
    Wide t = static_cast<Wide>(limb) * mul + carry;
    limb = static_cast<Limb>(t);
    carry = static_cast<Limb>(t >> 64);
  }
  if (carry != 0) mag.push_back(carry);
}

}  // namespace

BigInt::BigInt(std::int64_t value) {
  if (value != 0) {
    neg_ = value < 0;
    // Negating in unsigned space keeps INT64_MIN well defined.
    Limb mag = static_cast<Limb>(value);
    if (neg_) mag = ~mag + 1;
    mag_.push_back(mag);
  }
}

BigInt BigInt::from_u64(std::uint64_t value) {
  BigInt out;
  if (value != 0) out.mag_.push_back(value);
  return out;
}

BigInt BigInt::from_limbs(std::span<const Limb> limbs, bool negative) {
  BigInt out;
  out.mag_.assign(limbs.data(), limbs.data() + limbs.size());
  out.neg_ = negative;
  out.normalize();
  return out;
}

BigInt BigInt::from_decimal(std::string_view digits) {
  if (digits.empty()) throw Error(ErrorCode::kParse, "empty decimal literal");
  BigInt out;
  std::size_t i = 0;
  // Consume the digits in 19-digit chunks so each step is one limb multiply.
  const std::size_t head = digits.size() % 19;
  std::size_t chunk = head == 0 ? 19 : head;
  while (i < digits.size()) {
    Limb value = 0;
    Limb scale = 1;
    for (std::size_t k = 0; k < chunk; ++k) {
      char c = digits[i + k];
      if (c < '0' || c > '9') {
        throw Error(ErrorCode::kParse,
                    "invalid decimal digit '" + std::string(1, c) + "'");
      }
      value = value * 10 + static_cast<Limb>(c - '0');
      scale *= 10;
    }
    mul_add_small(out.mag_, scale, value);
    i += chunk;
    chunk = 19;
  }
  out.normalize();
  return out;
}

BigInt BigInt::from_hex(std::string_view digits) {
  if (digits.empty()) throw Error(ErrorCode::kParse, "empty hex literal");
  BigInt out;
  out.mag_.assign((digits.size() + 15) / 16, 0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[digits.size() - 1 - i];
    const int v = hex_value(c);
    if (v < 0) {
      throw Error(ErrorCode::kParse,
                  "invalid hex digit '" + std::string(1, c) + "'");
    }
    out.mag_[i / 16] |= static_cast<Limb>(v) << (4 * (i % 16));
  }
  out.normalize();
  return out;
}

BigInt BigInt::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  BigInt out;
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    out = from_hex(text.substr(2));
  } else {
    out = from_decimal(text);
  }
  if (negative) out = -out;
  return out;
}

BigInt BigInt::from_bytes_be(std::span<const std::uint8_t> bytes) {
  BigInt out;
  out.mag_.assign((bytes.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const std::uint8_t b = bytes[bytes.size() - 1 - i];
    out.mag_[i / 8] |= static_cast<Limb>(b) << (8 * (i % 8));
  }
  out.normalize();
  return out;
}

std::vector<std::uint8_t> BigInt::to_bytes_be(std::size_t width) const {
  if ((bit_length() + 7) / 8 > width) {
    throw Error(ErrorCode::kInvalidArgument,
                "integer does not fit in " + std::to_string(width) + " bytes");
  }
  std::vector<std::uint8_t> out(width, 0);
  for (std::size_t i = 0; i < width && i / 8 < mag_.size(); ++i) {
    out[width - 1 - i] = static_cast<std::uint8_t>(mag_[i / 8] >> (8 * (i % 8)));
  }
  return out;
}

std::string BigInt::to_hex(bool uppercase) const {
  if (mag_.empty()) return "0";
  const char* alphabet = uppercase ? "0123456789ABCDEF" : "0123456789abcdef";
  std::string out;
  out.reserve(mag_.size() * 16 + 1);
  if (neg_) out.push_back('-');
  bool started = false;
  for (std::size_t i = mag_.size(); i-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      const int v = static_cast<int>((mag_[i] >> (4 * nib)) & 0xF);
      if (v == 0 && !started) continue;
      started = true;
      out.push_back(alphabet[v]);
    }
  }
  return out;
}

std::string BigInt::to_decimal() const {
  if (mag_.empty()) return "0";
  constexpr Limb kChunk = 10'000'000'000'000'000'000ULL;  // 10^19
  LimbBuffer rest = mag_;
  LimbBuffer chunks;
  const Limb divisor[1] = {kChunk};
  while (!rest.empty()) {
    LimbBuffer q;
    LimbBuffer r;
    detail::divmod_mag(rest, divisor, &q, &r);
    chunks.push_back(r.empty() ? 0 : r[0]);
    rest = std::move(q);
  }
  std::string out = neg_ ? "-" : "";
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(19 - part.size(), '0');
    out += part;
  }
  return out;
}

std::size_t BigInt::bit_length() const noexcept {
  if (mag_.empty()) return 0;
  return mag_.size() * 64 - static_cast<std::size_t>(std::countl_zero(mag_.back()));
}

bool BigInt::bit(std::size_t index) const noexcept {
  const std::size_t limb = index / 64;
  if (limb >= mag_.size()) return false;
  return ((mag_[limb] >> (index % 64)) & 1U) != 0;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.neg_ = false;
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.mag_.empty()) out.neg_ = !out.neg_;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (neg_ == rhs.neg_) {
    mag_ = detail::add_mag(mag_, rhs.mag_);
  } else if (detail::compare_mag(mag_, rhs.mag_) >= 0) {
    mag_ = detail::sub_mag(mag_, rhs.mag_);
  } else {
    mag_ = detail::sub_mag(rhs.mag_, mag_);
    neg_ = rhs.neg_;
  }
  normalize();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
  if (neg_ != rhs.neg_) {
    mag_ = detail::add_mag(mag_, rhs.mag_);
  } else if (detail::compare_mag(mag_, rhs.mag_) >= 0) {
    mag_ = detail::sub_mag(mag_, rhs.mag_);
  } else {
    mag_ = detail::sub_mag(rhs.mag_, mag_);
    neg_ = !neg_;
  }
  normalize();
  return *this;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  BigInt out;
  out.mag_ = detail::mul_mag(lhs.mag_, rhs.mag_);
  out.neg_ = lhs.neg_ != rhs.neg_;
  out.normalize();
  return out;
}

namespace {

// out = a + b over max(na, nb) limbs; returns the carry. na >= nb.
Limb add_limbs(const Limb* a, std::size_t na, const Limb* b, std::size_t nb, Limb* out) {
  Limb carry = 0;
  for (std::size_t i = 0; i < na; ++i) {
    const Limb bi = i < nb ? b[i] : 0;
    Limb t = a[i] + carry;
    carry = t < carry;
    t += bi;
    carry += t < bi;
    out[i] = t;
  }
  return carry;
}

// out = a - b over na limbs; returns the borrow. na >= nb.
Limb sub_limbs(const Limb* a, std::size_t na, const Limb* b, std::size_t nb, Limb* out) {
  Limb borrow = 0;
  for (std::size_t i = 0; i < na; ++i) {
    const Limb bi = i < nb ? b[i] : 0;
    const Limb ai = a[i];
    const Limb t = ai - bi;
    const Limb next = (ai < bi) | (t < borrow);
    out[i] = t - borrow;
    borrow = next;
  }
  return borrow;
}

bool reduced(const BigInt& x, const BigInt& modulus) {
  return !x.is_negative() && x < modulus;
}

// k when m == 2^k - 1, else 0.
std::size_t mersenne_bits(const LimbBuffer& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (m[i] != ~Limb{0}) return 0;
  }
  const Limb top = m[n - 1];
  if ((top & (top + 1)) != 0) return 0;
  return (n - 1) * 64 + static_cast<std::size_t>(std::bit_width(top));
}

}  // namespace

BigInt BigInt::mul_mod(const BigInt& lhs, const BigInt& rhs, const BigInt& modulus) {
  if (modulus.sign() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must be positive");
  }
  if (lhs.neg_ || rhs.neg_) return (lhs * rhs).mod(modulus);
  BigInt out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  constexpr std::size_t kStackLimbs = 2 * LimbBuffer::kInline;
  const std::size_t n = lhs.mag_.size() + rhs.mag_.size();
  Limb stack[kStackLimbs];
  LimbBuffer heap;
  Limb* prod = stack;
  if (n > kStackLimbs) {
    heap.resize(n);
    prod = heap.data();
  }
  detail::mul_into(lhs.mag_, rhs.mag_, prod);
  std::size_t len = n;
  while (len > 0 && prod[len - 1] == 0) --len;
  const std::size_t k = mersenne_bits(modulus.mag_);
  if (k != 0 && reduced(lhs, modulus) && reduced(rhs, modulus)) {
    // prod < 2^2k, so (prod mod 2^k) + (prod >> k) < 2m.
    const std::size_t ml = modulus.mag_.size(), w = k / 64;
    const unsigned sh = k % 64;
    auto at = [&](std::size_t i) { return i < len ? prod[i] : Limb{0}; };
    out.mag_.resize(ml + 1);
    Limb* r = out.mag_.data();
    Limb carry = 0;
    for (std::size_t i = 0; i < ml; ++i) {
      Limb lo = at(i);
      if (sh != 0 && i == ml - 1) lo &= (Limb{1} << sh) - 1;
      Limb hi = at(w + i) >> sh;
      if (sh != 0) hi |= at(w + i + 1) << (64 - sh);
      Limb t = lo + carry;
      carry = t < carry;
      t += hi;
      carry += t < hi;
      r[i] = t;
    }
    r[ml] = carry;
    out.normalize();
    if (detail::compare_mag(out.mag_, modulus.mag_) >= 0) {
      sub_limbs(r, out.mag_.size(), modulus.mag_.data(), ml, r);
      out.normalize();
    }
    return out;
  }
  detail::divmod_mag({prod, len}, modulus.mag_, nullptr, &out.mag_);
  out.normalize();
  return out;
}

BigInt BigInt::add_mod(const BigInt& lhs, const BigInt& rhs, const BigInt& modulus) {
  if (modulus.sign() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must be positive");
  }
  if (!reduced(lhs, modulus) || !reduced(rhs, modulus)) return (lhs + rhs).mod(modulus);
  const LimbBuffer& a = lhs.mag_.size() >= rhs.mag_.size() ? lhs.mag_ : rhs.mag_;
  const LimbBuffer& b = lhs.mag_.size() >= rhs.mag_.size() ? rhs.mag_ : lhs.mag_;
  BigInt out;
  out.mag_.resize(a.size() + 1);
  out.mag_[a.size()] = add_limbs(a.data(), a.size(), b.data(), b.size(), out.mag_.data());
  out.normalize();
  if (detail::compare_mag(out.mag_, modulus.mag_) >= 0) {
    sub_limbs(out.mag_.data(), out.mag_.size(), modulus.mag_.data(), modulus.mag_.size(),
              out.mag_.data());
    out.normalize();
  }
  return out;
}

BigInt BigInt::sub_mod(const BigInt& lhs, const BigInt& rhs, const BigInt& modulus) {
  if (modulus.sign() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must be positive");
  }
  if (!reduced(lhs, modulus) || !reduced(rhs, modulus)) return (lhs - rhs).mod(modulus);
  BigInt out;
  if (detail::compare_mag(lhs.mag_, rhs.mag_) >= 0) {
    out.mag_.resize(lhs.mag_.size());
    sub_limbs(lhs.mag_.data(), lhs.mag_.size(), rhs.mag_.data(), rhs.mag_.size(),
              out.mag_.data());
  } else {
    // m - (rhs - lhs), both steps borrow-free.
    out.mag_.resize(modulus.mag_.size());
    sub_limbs(rhs.mag_.data(), rhs.mag_.size(), lhs.mag_.data(), lhs.mag_.size(),
              out.mag_.data());
    sub_limbs(modulus.mag_.data(), modulus.mag_.size(), out.mag_.data(), rhs.mag_.size(),
              out.mag_.data());
  }
  out.normalize();
  return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) { return *this = *this * rhs; }

void BigInt::divmod(const BigInt& dividend, const BigInt& divisor,
                    BigInt& quotient, BigInt& remainder) {
  if (divisor.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  LimbBuffer q;
  LimbBuffer r;
  detail::divmod_mag(dividend.mag_, divisor.mag_, &q, &r);
  quotient.mag_ = std::move(q);
  quotient.neg_ = dividend.neg_ != divisor.neg_;
  quotient.normalize();
  remainder.mag_ = std::move(r);
  remainder.neg_ = dividend.neg_;
  remainder.normalize();
}

BigInt operator/(const BigInt& lhs, const BigInt& rhs) {
  BigInt q;
  BigInt r;
  BigInt::divmod(lhs, rhs, q, r);
  return q;
}

BigInt operator%(const BigInt& lhs, const BigInt& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  BigInt r;
  detail::divmod_mag(lhs.mag_, rhs.mag_, nullptr, &r.mag_);
  r.neg_ = lhs.neg_;
  r.normalize();
  return r;
}

BigInt& BigInt::operator/=(const BigInt& rhs) { return *this = *this / rhs; }
BigInt& BigInt::operator%=(const BigInt& rhs) { return *this = *this % rhs; }

BigInt& BigInt::operator<<=(std::size_t bits) {
  if (mag_.empty() || bits == 0) return *this;
  const std::size_t limbs = bits / 64;
  const unsigned shift = static_cast<unsigned>(bits % 64);
  LimbBuffer out(mag_.size() + limbs + 1);
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    out[i + limbs] |= mag_[i] << shift;
    if (shift != 0) out[i + limbs + 1] = mag_[i] >> (64 - shift);
  }
  mag_ = std::move(out);
  normalize();
  return *this;
}

BigInt& BigInt::operator>>=(std::size_t bits) {
  const std::size_t limbs = bits / 64;
  if (limbs >= mag_.size()) {
    mag_.clear();
    neg_ = false;
    return *this;
  }
  const unsigned shift = static_cast<unsigned>(bits % 64);
  LimbBuffer out(mag_.size() - limbs);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = mag_[i + limbs] >> shift;
    if (shift != 0 && i + limbs + 1 < mag_.size()) {
      out[i] |= mag_[i + limbs + 1] << (64 - shift);
    }
  }
  mag_ = std::move(out);
  normalize();
  return *this;
}

BigInt BigInt::mod(const BigInt& modulus) const {
  if (modulus.sign() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must be positive");
  }
  BigInt r = *this % modulus;
  if (r.neg_) r += modulus;
  return r;
}

std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs) noexcept {
  if (lhs.neg_ != rhs.neg_) {
    return lhs.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int c = detail::compare_mag(lhs.mag_, rhs.mag_);
  if (lhs.neg_) c = -c;
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering compare_magnitude(const BigInt& lhs, const BigInt& rhs) noexcept {
  const int c = detail::compare_mag(lhs.limbs(), rhs.limbs());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) {
  if (value.is_negative()) return os << "-0x" << value.abs().to_hex();
  return os << "0x" << value.to_hex();
}

void BigInt::normalize() noexcept {
  detail::trim(mag_);
  if (mag_.empty()) neg_ = false;
}

}  // namespace ecchash
