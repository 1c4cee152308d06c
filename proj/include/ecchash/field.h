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

#ifndef ECCHASH_FIELD_H_
#define ECCHASH_FIELD_H_

#include <cstddef>
#include <memory>
#include <span>

#include "ecchash/bigint.h"

namespace ecchash {

// Shared modulus context. Elements of the same field point at one instance,
// which makes the compatibility check a pointer compare in the common case.
class PrimeField {
 public:
  // Throws Error(kInvalidModulus) when modulus < 2. Primality is not
  // checked; inversion fails with kNonInvertible on a composite modulus
  // only when it actually meets a shared factor.
  static std::shared_ptr<const PrimeField> create(BigInt modulus);

  const BigInt& modulus() const noexcept { return modulus_; }
  // Bytes needed to hold any canonical element.
  std::size_t byte_length() const noexcept { return byte_length_; }

 private:
  explicit PrimeField(BigInt modulus);

  BigInt modulus_;
  std::size_t byte_length_;
};

using FieldRef = std::shared_ptr<const PrimeField>;

// Immutable residue in [0, modulus).
class FieldElement {
 public:
  FieldElement(const BigInt& value, FieldRef field);

  // Builds a one-off field for `modulus`; negative values reduce to the
  // canonical non-negative residue.
  static FieldElement make(const BigInt& value, const BigInt& modulus);

  const BigInt& value() const noexcept { return value_; }
  const BigInt& modulus() const noexcept { return field_->modulus(); }
  const FieldRef& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return value_.is_zero(); }
  bool same_field(const FieldElement& other) const noexcept;

  // Binary operators throw Error(kIncompatibleModuli) on mismatched moduli.
  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement square() const;
  // Throws Error(kNonInvertible) for zero.
  FieldElement inverse() const;

  // Equal iff same modulus and same residue.
  friend bool operator==(const FieldElement& lhs, const FieldElement& rhs) noexcept {
    return lhs.same_field(rhs) && lhs.value_ == rhs.value_;
  }

 private:
  struct Reduced {};
  FieldElement(Reduced, BigInt value, FieldRef field) noexcept
      : value_(std::move(value)), field_(std::move(field)) {}

  void require_same_field(const FieldElement& other) const;

  BigInt value_;
  FieldRef field_;
};

// Replaces every element by its inverse with one inversion and 3(n - 1)
// multiplications (Montgomery's trick). All elements must share a field.
// Throws Error(kNonInvertible) if any is zero, leaving `xs` unchanged.
void batch_inverse(std::span<FieldElement> xs);

}  // namespace ecchash

#endif  // ECCHASH_FIELD_H_
