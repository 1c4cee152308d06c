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

#ifndef ECCHASH_LEDGER_H_
#define ECCHASH_LEDGER_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecchash/homhash.h"

namespace ecchash {

// Append-only hash store. One LF-terminated line per entry:
//
//   record_id,curve_name,point_hex
//
// where point_hex is encode_point() output. A single writer per file is
// assumed; there is no locking.

struct LedgerEntry {
  std::string record_id;
  std::string curve_name;
  std::string point_hex;

  // Builds an entry from a hash point, using its canonical curve name.
  static LedgerEntry from_hash(std::string record_id, const HashPoint& hash);

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

// Non-empty, no commas, no control characters.
bool is_valid_record_id(std::string_view id);

// Appends one line, creating the file if needed. Throws Error(kInvalidArgument)
// for a bad id or entry, Error(kDuplicateEntry) if the id is already present,
// Error(kParse)/Error(kIntegrity) if the existing file is corrupt, and
// Error(kStorage) on I/O failure or when the file does not end in LF.
void ledger_append(const std::filesystem::path& path, const LedgerEntry& entry);
// Same checks as ledger_append for every entry (ids must also be distinct
// among themselves); nothing is written unless all of them pass.
void ledger_append_all(const std::filesystem::path& path, std::span<const LedgerEntry> entries);

// Entries in file order, each decoded and checked against its curve.
// Throws Error(kStorage) if the file cannot be read, Error(kParse) naming the
// line for a malformed one, and Error(kIntegrity) for a well-formed line
// whose point is not on the named curve.
std::vector<LedgerEntry> ledger_load(const std::filesystem::path& path);

// Decoded points of ledger_load(), in file order.
std::vector<HashPoint> ledger_points(const std::filesystem::path& path);

// aggregate() over the ledger's points, restricted to one curve when
// `curve_filter` is given. Throws Error(kEmptyAggregate) when nothing matches
// and Error(kIncompatibleCurves) for an unfiltered mixed-curve ledger.
HashPoint ledger_aggregate(const std::filesystem::path& path,
                           std::optional<std::string_view> curve_filter = std::nullopt);

}  // namespace ecchash

#endif  // ECCHASH_LEDGER_H_
