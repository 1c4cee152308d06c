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

#ifndef ECCHASH_BIGINT_H_
#define ECCHASH_BIGINT_H_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecchash/limb_buffer.h"

namespace ecchash {

// Signed arbitrary-precision integer stored as sign + magnitude.
//
// The magnitude is a little-endian vector of 64-bit limbs with no leading
// zero limbs; zero is the empty vector and is never negative. Division
// truncates toward zero like the built-in integer types; use mod() for the
// canonical non-negative residue.
class BigInt {
 public:
  using Limb = std::uint64_t;
  static constexpr int kLimbBits = 64;

  BigInt() = default;
  BigInt(std::int64_t value);  // NOLINT(google-explicit-constructor)

  static BigInt from_u64(std::uint64_t value);
  static BigInt from_limbs(std::span<const Limb> limbs, bool negative = false);

  // Accepts an optional leading '-', then either "0x"/"0X" followed by hex
  // digits or plain decimal digits. Throws Error(kParse) on anything else.
  static BigInt parse(std::string_view text);
  static BigInt from_decimal(std::string_view digits);
  static BigInt from_hex(std::string_view digits);
  static BigInt from_bytes_be(std::span<const std::uint8_t> bytes);

  // Big-endian magnitude left-padded to `width` bytes. Throws
  // Error(kInvalidArgument) if the magnitude does not fit.
  std::vector<std::uint8_t> to_bytes_be(std::size_t width) const;
  std::string to_hex(bool uppercase = false) const;
  std::string to_decimal() const;

  bool is_zero() const noexcept { return mag_.empty(); }
  bool is_negative() const noexcept { return neg_; }
  bool is_odd() const noexcept { return !mag_.empty() && (mag_[0] & 1U); }
  bool is_one() const noexcept {
    return !neg_ && mag_.size() == 1 && mag_[0] == 1;
  }
  int sign() const noexcept { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }
  std::size_t bit_length() const noexcept;
  bool bit(std::size_t index) const noexcept;
  std::span<const Limb> limbs() const noexcept { return mag_; }
  std::size_t limb_count() const noexcept { return mag_.size(); }
  std::uint64_t low_u64() const noexcept { return mag_.empty() ? 0 : mag_[0]; }

  BigInt abs() const;
  BigInt operator-() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  BigInt& operator/=(const BigInt& rhs);
  BigInt& operator%=(const BigInt& rhs);
  // Shifts act on the magnitude; the sign is kept.
  BigInt& operator<<=(std::size_t bits);
  BigInt& operator>>=(std::size_t bits);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);
  friend BigInt operator/(const BigInt& lhs, const BigInt& rhs);
  friend BigInt operator%(const BigInt& lhs, const BigInt& rhs);
  friend BigInt operator<<(BigInt lhs, std::size_t bits) { return lhs <<= bits; }
  friend BigInt operator>>(BigInt lhs, std::size_t bits) { return lhs >>= bits; }

  // Truncated division; throws Error(kInvalidArgument) when divisor is zero.
  static void divmod(const BigInt& dividend, const BigInt& divisor,
                     BigInt& quotient, BigInt& remainder);

  // (lhs +/- rhs) mod modulus in one pass when both operands are already
  // reduced. Throws Error(kInvalidArgument) unless modulus > 0.
  static BigInt add_mod(const BigInt& lhs, const BigInt& rhs, const BigInt& modulus);
  static BigInt sub_mod(const BigInt& lhs, const BigInt& rhs, const BigInt& modulus);
  // (lhs * rhs) mod modulus without materialising the product on the heap.
  // Throws Error(kInvalidArgument) unless modulus > 0.
  static BigInt mul_mod(const BigInt& lhs, const BigInt& rhs, const BigInt& modulus);

  // Residue in [0, modulus). Requires modulus > 0.
  BigInt mod(const BigInt& modulus) const;

  friend bool operator==(const BigInt& lhs, const BigInt& rhs) noexcept {
    return lhs.neg_ == rhs.neg_ && lhs.mag_ == rhs.mag_;
  }
  friend std::strong_ordering operator<=>(const BigInt& lhs,
                                          const BigInt& rhs) noexcept;

 private:
  void normalize() noexcept;

  LimbBuffer mag_;
  bool neg_ = false;
};

// Writes signed lowercase hex with a 0x prefix.
std::ostream& operator<<(std::ostream& os, const BigInt& value);

// Magnitude comparison ignoring sign.
std::strong_ordering compare_magnitude(const BigInt& lhs, const BigInt& rhs) noexcept;

// Inverse of `value` modulo `modulus` via Lehmer's extended Euclidean
// algorithm. `value` is reduced first. Throws Error(kNonInvertible) when
// gcd(value, modulus) != 1 and Error(kInvalidModulus) for modulus < 2.
BigInt mod_inverse(const BigInt& value, const BigInt& modulus);

}  // namespace ecchash

#endif  // ECCHASH_BIGINT_H_
