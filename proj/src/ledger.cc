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

#include "ecchash/ledger.h"

#include <fstream>
#include <iterator>
#include <unordered_set>

#include "ecchash/error.h"

namespace ecchash {
namespace {

struct Loaded {
  std::vector<LedgerEntry> entries;
  std::vector<HashPoint> points;
};

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kStorage, "cannot open ledger " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kStorage, "read error on ledger " + path.string());
  return bytes;
}

std::string at_line(std::size_t lineno, const std::string& what) {
  return "ledger line " + std::to_string(lineno) + ": " + what;
}

// Canonical curve for a stored name; the stored spelling must be exact.
CurveRef stored_curve(std::string_view name) {
  CurveRef curve;
  try {
    curve = curve_registry(name);
  } catch (const Error&) {
    return nullptr;
  }
  return curve->name == name ? curve : nullptr;
}

Loaded parse_ledger(const std::string& bytes) {
  Loaded out;
  std::unordered_set<std::string> ids;
  std::size_t pos = 0;
  for (std::size_t lineno = 1; pos < bytes.size(); ++lineno) {
    const std::size_t eol = bytes.find('\n', pos);
    if (eol == std::string::npos) {
      throw Error(ErrorCode::kParse, at_line(lineno, "truncated line without LF"));
    }
    const std::string_view line(bytes.data() + pos, eol - pos);
    pos = eol + 1;

    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos) {
      throw Error(ErrorCode::kParse, at_line(lineno, "expected record_id,curve_name,point_hex"));
    }
    LedgerEntry entry{std::string(line.substr(0, c1)), std::string(line.substr(c1 + 1, c2 - c1 - 1)),
                      std::string(line.substr(c2 + 1))};
    if (!is_valid_record_id(entry.record_id)) {
      throw Error(ErrorCode::kParse, at_line(lineno, "bad record id '" + entry.record_id + "'"));
    }
    const CurveRef curve = stored_curve(entry.curve_name);
    if (!curve) {
      throw Error(ErrorCode::kParse, at_line(lineno, "unknown curve '" + entry.curve_name + "'"));
    }
    if (!is_canonical_encoding(entry.point_hex, *curve)) {
      throw Error(ErrorCode::kParse, at_line(lineno, "malformed point encoding"));
    }
    try {
      out.points.push_back(decode_point(entry.point_hex, curve));
    } catch (const Error& e) {
      throw Error(ErrorCode::kIntegrity, at_line(lineno, e.what()));
    }
    if (!ids.insert(entry.record_id).second) {
      throw Error(ErrorCode::kIntegrity,
                  at_line(lineno, "record id '" + entry.record_id + "' appears twice"));
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

Loaded load_if_present(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    if (ec) throw Error(ErrorCode::kStorage, "cannot stat ledger " + path.string());
    return {};
  }
  const std::string bytes = read_all(path);
  if (!bytes.empty() && bytes.back() != '\n') {
    throw Error(ErrorCode::kStorage,
                "ledger " + path.string() + " does not end in LF; refusing to append");
  }
  return parse_ledger(bytes);
}

void validate_entry(const LedgerEntry& entry) {
  if (!is_valid_record_id(entry.record_id)) {
    throw Error(ErrorCode::kInvalidArgument, "bad record id '" + entry.record_id + "'");
  }
  const CurveRef curve = stored_curve(entry.curve_name);
  if (!curve) {
    throw Error(ErrorCode::kInvalidArgument, "unknown curve name '" + entry.curve_name + "'");
  }
  if (!is_canonical_encoding(entry.point_hex, *curve)) {
    throw Error(ErrorCode::kInvalidArgument, "point is not a canonical encoding");
  }
  try {
    decode_point(entry.point_hex, curve);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidArgument, e.what());
  }
}

}  // namespace

LedgerEntry LedgerEntry::from_hash(std::string record_id, const HashPoint& hash) {
  return LedgerEntry{std::move(record_id), hash.curve_name(), encode_point(hash)};
}

bool is_valid_record_id(std::string_view id) {
  if (id.empty()) return false;
  for (unsigned char c : id) {
    if (c == ',' || c < 0x20 || c == 0x7f) return false;
  }
  return true;
}

void ledger_append_all(const std::filesystem::path& path, std::span<const LedgerEntry> entries) {
  const Loaded existing = load_if_present(path);
  std::unordered_set<std::string> ids;
  for (const auto& e : existing.entries) ids.insert(e.record_id);
  std::string text;
  for (const auto& entry : entries) {
    validate_entry(entry);
    if (!ids.insert(entry.record_id).second) {
      throw Error(ErrorCode::kDuplicateEntry,
                  "record id '" + entry.record_id + "' is already in the ledger");
    }
    text += entry.record_id + ',' + entry.curve_name + ',' + entry.point_hex + '\n';
  }
  if (text.empty()) return;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw Error(ErrorCode::kStorage, "cannot open ledger " + path.string() + " for append");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::kStorage, "write to ledger " + path.string() + " failed");
}

void ledger_append(const std::filesystem::path& path, const LedgerEntry& entry) {
  ledger_append_all(path, std::span<const LedgerEntry>(&entry, 1));
}

std::vector<LedgerEntry> ledger_load(const std::filesystem::path& path) {
  return parse_ledger(read_all(path)).entries;
}

std::vector<HashPoint> ledger_points(const std::filesystem::path& path) {
  return parse_ledger(read_all(path)).points;
}

HashPoint ledger_aggregate(const std::filesystem::path& path,
                           std::optional<std::string_view> curve_filter) {
  std::vector<HashPoint> points = ledger_points(path);
  if (curve_filter) {
    const std::string name = curve_registry(*curve_filter)->name;
    std::erase_if(points, [&](const HashPoint& h) { return h.curve_name() != name; });
    if (points.empty()) {
      throw Error(ErrorCode::kEmptyAggregate, "ledger has no " + name + " entries");
    }
  } else if (points.empty()) {
    throw Error(ErrorCode::kEmptyAggregate, "ledger is empty");
  }
  return aggregate(points);
}

}  // namespace ecchash
