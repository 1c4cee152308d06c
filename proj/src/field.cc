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

#include "ecchash/field.h"

#include <utility>
#include <vector>

#include "ecchash/error.h"

namespace ecchash {

PrimeField::PrimeField(BigInt modulus)
    : modulus_(std::move(modulus)), byte_length_((modulus_.bit_length() + 7) / 8) {}

std::shared_ptr<const PrimeField> PrimeField::create(BigInt modulus) {
  if (modulus < BigInt(2)) {
    throw Error(ErrorCode::kInvalidModulus,
                "modulus must be at least 2, got " + modulus.to_decimal());
  }
  return std::shared_ptr<const PrimeField>(new PrimeField(std::move(modulus)));
}

FieldElement::FieldElement(const BigInt& value, FieldRef field)
    : value_(value.mod(field->modulus())), field_(std::move(field)) {}

FieldElement FieldElement::make(const BigInt& value, const BigInt& modulus) {
  return FieldElement(value, PrimeField::create(modulus));
}

bool FieldElement::same_field(const FieldElement& other) const noexcept {
  return field_ == other.field_ || field_->modulus() == other.field_->modulus();
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (!same_field(other)) {
    throw Error(ErrorCode::kIncompatibleModuli, "field elements have different moduli");
  }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(rhs);
  return FieldElement(Reduced{}, BigInt::add_mod(value_, rhs.value_, modulus()), field_);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  require_same_field(rhs);
  return FieldElement(Reduced{}, BigInt::sub_mod(value_, rhs.value_, modulus()), field_);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(rhs);
  return FieldElement(Reduced{}, BigInt::mul_mod(value_, rhs.value_, modulus()), field_);
}

FieldElement FieldElement::operator-() const {
  if (value_.is_zero()) return *this;
  return FieldElement(Reduced{}, modulus() - value_, field_);
}

FieldElement FieldElement::square() const {
  return FieldElement(Reduced{}, BigInt::mul_mod(value_, value_, modulus()), field_);
}

FieldElement FieldElement::inverse() const {
  if (value_.is_zero()) {
    throw Error(ErrorCode::kNonInvertible, "zero has no multiplicative inverse");
  }
  return FieldElement(Reduced{}, mod_inverse(value_, modulus()), field_);
}

void batch_inverse(std::span<FieldElement> xs) {
  if (xs.empty()) return;
  for (const auto& x : xs) {
    if (x.is_zero()) throw Error(ErrorCode::kNonInvertible, "zero has no multiplicative inverse");
  }
  std::vector<FieldElement> prefix;
  prefix.reserve(xs.size());
  prefix.push_back(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) prefix.push_back(prefix.back() * xs[i]);
  FieldElement inv = prefix.back().inverse();
  for (std::size_t i = xs.size() - 1; i > 0; --i) {
    FieldElement xi_inv = inv * prefix[i - 1];
    inv = inv * xs[i];
    xs[i] = std::move(xi_inv);
  }
  xs[0] = std::move(inv);
}

}  // namespace ecchash
