// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "esdp/mine/pattern.hpp"
#include "esdp/store/central.hpp"

namespace esdp {

/// Lookup tables over a loaded central repository.
class CentralIndex {
 public:
  explicit CentralIndex(const CentralRepository& repo);

  const CentralRepository& repo() const noexcept { return *repo_; }
  const Transaction* transaction(const std::string& id) const;
  const UnitSummary* unit(const std::string& path) const;
  /// File backing a unit, when its source is a directory.
  std::optional<std::filesystem::path> source_file(const std::string& unit_path) const;

 private:
  const CentralRepository* repo_;
  std::unordered_map<std::string, const Transaction*> transactions_;
  std::unordered_map<std::string, const UnitSummary*> units_;
};

struct CodeSkeleton {
  std::string unit_path;
  std::string entity;
  LineSpan span;
  /// Comment lines naming the pattern and its measures.
  std::vector<std::string> header;
  /// Verbatim block lines, or one "KIND name" line per item when synthetic.
  std::vector<std::string> lines;
  /// Source line numbers of the pattern's items within the block.
  std::vector<int> highlights;
  bool synthetic = false;
};

/// Skeleton for exemplar `exemplar_choice` of `pattern`. Falls back to a
/// synthetic skeleton when the transaction, its file, or the file's recorded
/// digest cannot be matched. Throws RangeError for a bad exemplar index.
CodeSkeleton assemble_skeleton(const SequencePattern& pattern, const CentralIndex& central,
                               std::size_t exemplar_choice);

}  // namespace esdp
