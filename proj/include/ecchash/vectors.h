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

#ifndef ECCHASH_VECTORS_H_
#define ECCHASH_VECTORS_H_

#include <array>
#include <string_view>

namespace ecchash::vectors {

// Three-record P-224 example: plaintexts, their hashes and the sum.
inline constexpr std::string_view kCurve = "P-224";
inline constexpr std::array<std::string_view, 3> kRecords = {"0x0CDD5C", "0x0A3E66", "0x0A8E20"};

struct Coords {
  std::string_view x;
  std::string_view y;
};

inline constexpr std::array<Coords, 3> kHashes = {{
    {"3D52F972A9D70B38A3D6F583DF55B885EB2959E8185562508007742A",
     "9A1FC185CB8598240CF6856FBA844AECD2B288BEF94B8BDDB5545597"},
    {"EDE39EAED72AB45A74A5A52B460ADE8F7AF382196B470576E7CF4180",
     "1E8E022828D1FAE983BE6E7427E84E1613A53252CE312375EA844A5F"},
    {"67670504C5E3592DFC82EFFCA4F145D8ECC32423151A070A4ACB7158",
     "99C86BE114EA9A7B77A37B17618651C865E796AB2D786D73AD4EB4D1"},
}};

inline constexpr Coords kSum = {"1611C11FD083F3A3C92981BCE50B874D70B70A5CB17688F648CBF486",
                                "4ECEF092A95E67E29D459E43F68169EE3A00478DCF3C479EC1DF6EA4"};

// Strings as they were typeset in the reference material, transcription
// slips included: the first hash's y has one 'D' doubled (57 digits for a
// 224-bit value) and the sum's y has the letter O for a zero.
inline constexpr std::string_view kPrintedHash1Y =
    "9A1FC185CB8598240CF6856FBA844AECD2B288BEF94B8BDDDB5545597";
inline constexpr std::string_view kPrintedSumY =
    "4ECEFO92A95E67E29D459E43F68169EE3A00478DCF3C479EC1DF6EA4";

}  // namespace ecchash::vectors

#endif  // ECCHASH_VECTORS_H_
