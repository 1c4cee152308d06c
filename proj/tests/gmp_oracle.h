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

#ifndef ECCHASH_TESTS_GMP_ORACLE_H_
#define ECCHASH_TESTS_GMP_ORACLE_H_

// GMP is the independent reference for the hand-written bignum code. Values
// cross the boundary as hex strings so no limb layout is shared.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

#include "ecchash/bigint.h"

namespace ecchash::testing {

inline mpz_class to_mpz(const BigInt& x) {
  std::string hex = x.to_hex();
  bool neg = !hex.empty() && hex[0] == '-';
  mpz_class out(neg ? hex.substr(1) : hex, 16);
  return neg ? mpz_class(-out) : out;
}

inline BigInt from_mpz(const mpz_class& x) {
  std::string hex = x.get_str(16);
  if (hex[0] == '-') return -BigInt::from_hex(hex.substr(1));
  return BigInt::from_hex(hex);
}

// Random magnitude with `limbs` limbs; biased toward limbs that are all ones
// or zero, which is where carry and quotient-estimate bugs hide.
inline BigInt random_bigint(std::mt19937_64& rng, std::size_t limbs) {
  std::vector<std::uint64_t> v(limbs);
  for (auto& limb : v) {
    switch (rng() % 8) {
      case 0: limb = ~std::uint64_t{0}; break;
      case 1: limb = 0; break;
      case 2: limb = std::uint64_t{1} << (rng() % 64); break;
      default: limb = rng();
    }
  }
  return BigInt::from_limbs(v);
}

}  // namespace ecchash::testing

#endif  // ECCHASH_TESTS_GMP_ORACLE_H_
