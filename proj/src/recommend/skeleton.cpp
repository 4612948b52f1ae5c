// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/recommend/skeleton.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "esdp/common/digest.hpp"
#include "esdp/common/error.hpp"
#include "esdp/common/source_unit.hpp"
#include "esdp/common/strings.hpp"

namespace esdp {

CentralIndex::CentralIndex(const CentralRepository& repo) : repo_(&repo) {
  for (const auto& tx : repo.transactions) transactions_.emplace(tx.id, &tx);
  for (const auto& u : repo.manifest.units) units_.emplace(u.path, &u);
}

const Transaction* CentralIndex::transaction(const std::string& id) const {
  const auto it = transactions_.find(id);
  return it == transactions_.end() ? nullptr : it->second;
}

const UnitSummary* CentralIndex::unit(const std::string& path) const {
  const auto it = units_.find(path);
  return it == units_.end() ? nullptr : it->second;
}

std::optional<std::filesystem::path> CentralIndex::source_file(const std::string& unit_path) const {
  const UnitSummary* u = unit(unit_path);
  if (u == nullptr) return std::nullopt;
  const std::string prefix = u->source_id + "/";
  if (!unit_path.starts_with(prefix)) return std::nullopt;
  for (const auto& s : repo_->manifest.sources) {
    if (s.id != u->source_id) continue;
    std::error_code ec;
    if (!std::filesystem::is_directory(s.root, ec)) return std::nullopt;
    return s.root / std::filesystem::path(unit_path.substr(prefix.size()));
  }
  return std::nullopt;
}

namespace {

std::vector<int> embed_lines(const SequencePattern& pattern, const Transaction& tx) {
  std::vector<int> lines;
  std::size_t next = 0;
  for (const auto& item : tx.items) {
    if (next == pattern.items.size()) break;
    if (item.kind == pattern.items[next].kind && item.name == pattern.items[next].name) {
      lines.push_back(item.line);
      ++next;
    }
  }
  if (next != pattern.items.size()) return {};
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

void make_synthetic(CodeSkeleton& sk, const SequencePattern& pattern) {
  sk.synthetic = true;
  sk.lines.clear();
  sk.highlights.clear();
  for (const auto& item : pattern.items) sk.lines.push_back(fmt::format("{} {}", code(item.kind), item.name));
}

}  // namespace

CodeSkeleton assemble_skeleton(const SequencePattern& pattern, const CentralIndex& central,
                               std::size_t exemplar_choice) {
  if (exemplar_choice >= pattern.exemplars.size()) {
    throw RangeError(fmt::format("exemplar {} requested, pattern rank {} has {}", exemplar_choice, pattern.rank,
                                 pattern.exemplars.size()));
  }
  CodeSkeleton sk;
  sk.header.push_back("// pattern: " + render_pattern(pattern));
  sk.header.push_back(fmt::format("// score {} support {} confidence {:.6f} rank {}", pattern.score, pattern.support,
                                  pattern.confidence, pattern.rank));

  const Transaction* tx = central.transaction(pattern.exemplars[exemplar_choice]);
  if (tx == nullptr) {
    make_synthetic(sk, pattern);
    return sk;
  }
  sk.unit_path = tx->unit_path;
  sk.entity = tx->entity;
  sk.span = tx->span;
  sk.header.push_back(fmt::format("// from {} lines {}-{}", tx->unit_path, tx->span.start, tx->span.end));

  const auto file = central.source_file(tx->unit_path);
  const UnitSummary* unit = central.unit(tx->unit_path);
  if (!file || unit == nullptr) {
    make_synthetic(sk, pattern);
    return sk;
  }
  std::string text;
  try {
    text = read_file_bytes(*file);
  } catch (const Error&) {
    make_synthetic(sk, pattern);
    return sk;
  }
  const bool unchanged = sha256_hex(text) == unit->digest;
  text = sanitize_utf8(text);
  const LineIndex index(text);
  if (!unchanged || static_cast<std::size_t>(tx->span.end) > index.line_count()) {
    make_synthetic(sk, pattern);
    return sk;
  }
  for (int line = tx->span.start; line <= tx->span.end; ++line) {
    sk.lines.emplace_back(index.line_text(text, static_cast<std::size_t>(line)));
  }
  for (const int line : embed_lines(pattern, *tx)) {
    if (tx->span.contains(line)) sk.highlights.push_back(line);
  }
  return sk;
}

}  // namespace esdp
