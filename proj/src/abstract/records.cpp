// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/abstract/records.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include <json.hpp>

#include "esdp/common/error.hpp"
#include "esdp/common/strings.hpp"

namespace esdp {

namespace {

constexpr std::array<std::string_view, 7> kFields = {"kind", "name", "entity", "line", "unit", "block", "span"};

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw RecordFormatError("record line " + std::to_string(line_no) + ": " + what);
}

std::string required_string(const nlohmann::json& obj, const char* key, std::size_t line_no) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) fail(line_no, std::string("field '") + key + "' must be a string");
  std::string value = it->get<std::string>();
  if (value.empty()) fail(line_no, std::string("field '") + key + "' must be non-empty");
  return value;
}

int required_positive(const nlohmann::json& value, const std::string& what, std::size_t line_no) {
  if (!value.is_number_integer()) fail(line_no, what + " must be an integer");
  const auto n = value.get<long long>();
  if (n < 1 || n > 0x7fffffff) fail(line_no, what + " must be a positive line number");
  return static_cast<int>(n);
}

}  // namespace

RecordImport import_records(std::istream& in, const std::string& unit_prefix) {
  using Key = std::tuple<std::string, std::string, BlockKind, LineSpan>;
  std::map<Key, std::size_t> index;
  std::vector<std::vector<ExtractedItem>> groups;
  std::vector<Key> keys;
  RecordImport result;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (trim(raw).empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(raw);
    } catch (const nlohmann::json::parse_error& e) {
      fail(line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!obj.is_object()) fail(line_no, "record must be a JSON object");
    for (const auto& [key, value] : obj.items()) {
      if (std::find(kFields.begin(), kFields.end(), key) == kFields.end()) fail(line_no, "unknown field '" + key + "'");
    }
    const auto kind = parse_item_kind(required_string(obj, "kind", line_no));
    if (!kind) fail(line_no, "unknown item kind");
    const auto block = parse_block_kind(required_string(obj, "block", line_no));
    if (!block) fail(line_no, "block must be \"class\" or \"method\"");
    const auto line_it = obj.find("line");
    if (line_it == obj.end()) fail(line_no, "missing field 'line'");
    const auto span_it = obj.find("span");
    if (span_it == obj.end() || !span_it->is_array() || span_it->size() != 2) {
      fail(line_no, "field 'span' must be [start, end]");
    }
    const LineSpan span{required_positive((*span_it)[0], "span start", line_no),
                        required_positive((*span_it)[1], "span end", line_no)};
    if (span.start > span.end) fail(line_no, "span start exceeds span end");

    ExtractedItem extracted;
    extracted.item.kind = *kind;
    extracted.item.name = required_string(obj, "name", line_no);
    extracted.item.entity = required_string(obj, "entity", line_no);
    extracted.item.line = required_positive(*line_it, "line", line_no);
    extracted.block = *block;
    extracted.span = span;
    if (!span.contains(extracted.item.line)) fail(line_no, "line lies outside span");

    std::string unit = required_string(obj, "unit", line_no);
    if (!unit_prefix.empty()) unit = unit_prefix + "/" + unit;
    if (std::find(result.unit_paths.begin(), result.unit_paths.end(), unit) == result.unit_paths.end()) {
      result.unit_paths.push_back(unit);
    }
    Key key{unit, extracted.item.entity, *block, span};
    auto [it, inserted] = index.emplace(key, groups.size());
    if (inserted) {
      groups.emplace_back();
      keys.push_back(key);
    }
    groups[it->second].push_back(std::move(extracted));
  }

  for (std::size_t g = 0; g < groups.size(); ++g) {
    auto& members = groups[g];
    std::stable_sort(members.begin(), members.end(), canonical_less);
    members.erase(std::unique(members.begin(), members.end(),
                              [](const ExtractedItem& a, const ExtractedItem& b) { return a.item == b.item; }),
                  members.end());
    Transaction tx;
    tx.unit_path = std::get<0>(keys[g]);
    tx.entity = std::get<1>(keys[g]);
    tx.block = std::get<2>(keys[g]);
    tx.span = std::get<3>(keys[g]);
    tx.id = transaction_id(tx.unit_path, tx.entity, tx.span);
    for (auto& m : members) tx.items.push_back(std::move(m.item));
    result.transactions.push_back(std::move(tx));
  }
  // Same (unit, entity, span) with different block kinds would share an id.
  std::map<std::string, int> seen;
  for (auto& tx : result.transactions) {
    const int n = ++seen[tx.id];
    if (n > 1) tx.id += "~" + std::to_string(n);
  }
  return result;
}

}  // namespace esdp
